import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";

function apiBase(): string {
    const params = new URLSearchParams(window.location.search);
    return params.get("api") ?? "http://127.0.0.1:8000";
}

const root = document.getElementById("app");
if (!root) {
    throw new Error("missing #app container");
}
const app = new ExplorerApp(new ApiClient(apiBase()), root);
app.start().catch((err) => {
    root.textContent = `cannot reach the scale service at ${apiBase()}: ${err}`;
});
