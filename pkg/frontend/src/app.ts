// Explorer application: preset picker, design knobs, the draggable rule
// with live read-outs, and the analysis panels (legibility bound,
// alignment ratio with equivalence warning, triangle workbench).
//
// All state lives here in the browser; the service is stateless and
// every displayed number originates from one of its responses.

import {
    AccuracyReportJson,
    AlignmentReportJson,
    ApiClient,
    LatestGate,
    LayoutJson,
    ReadOutJson,
    RegistryEntryJson,
    TriangleReportJson,
} from "./api.js";
import { DEFAULT_KNOBS, DesignKnobs, Preset, PRESETS, presetByName } from "./presets.js";
import { RuleView } from "./ruleView.js";

const READ_DEBOUNCE_MS = 100;

export interface ExplorerState {
    presetName: string;
    knobs: DesignKnobs;
    layout: LayoutJson | null;
    slideOffsetMm: number;
    hairlineMm: number;
    lastReadouts: ReadOutJson[];
    lastAccuracy: AccuracyReportJson | null;
    lastAlignment: AlignmentReportJson | null;
    lastTriangle: TriangleReportJson | null;
    triangleLeg: number;
}

export function formatValue(value: number): string {
    if (!isFinite(value)) {
        return "∞";
    }
    const abs = Math.abs(value);
    if (abs !== 0 && (abs >= 1e6 || abs < 1e-4)) {
        return value.toExponential(3);
    }
    const text = value.toPrecision(4);
    return text.includes(".") ? text.replace(/\.?0+$/, "") : text;
}

export class ExplorerApp {
    readonly state: ExplorerState;
    readonly ruleView: RuleView;
    private readonly doc: Document;
    private registry: RegistryEntryJson[] = [];
    private readGate = new LatestGate();
    private readTimer: ReturnType<typeof setTimeout> | null = null;
    private pending: Promise<unknown>[] = [];
    private pxPerMm = 4;

    private presetSelect!: HTMLSelectElement;
    private knobPanel!: HTMLDivElement;
    private readoutTable!: HTMLTableElement;
    private accuracyChip!: HTMLSpanElement;
    private alignmentChip!: HTMLSpanElement;
    private warningChip!: HTMLSpanElement;
    private triangleBox!: HTMLDivElement;
    private errorBox!: HTMLDivElement;

    constructor(
        private readonly api: ApiClient,
        private readonly root: HTMLElement,
    ) {
        this.doc = root.ownerDocument;
        this.state = {
            presetName: PRESETS[0].name,
            knobs: { ...DEFAULT_KNOBS },
            layout: null,
            slideOffsetMm: 0,
            hairlineMm: 0,
            lastReadouts: [],
            lastAccuracy: null,
            lastAlignment: null,
            lastTriangle: null,
            triangleLeg: 40,
        };
        this.ruleView = new RuleView(this.doc, {
            onHairline: (mm) => this.setHairline(mm),
            onSlideOffset: (mm) => this.setSlideOffset(mm),
        });
        this.buildShell();
    }

    async start(presetName?: string): Promise<void> {
        this.registry = await this.api.registry();
        await this.loadPreset(presetName ?? this.state.presetName);
    }

    /** Resolve once every scheduled request has settled. */
    async whenIdle(): Promise<void> {
        while (this.readTimer !== null || this.pending.length > 0) {
            if (this.readTimer !== null) {
                clearTimeout(this.readTimer);
                this.readTimer = null;
                this.requestReadouts();
            }
            const batch = this.pending;
            this.pending = [];
            await Promise.allSettled(batch);
        }
    }

    private track<T>(promise: Promise<T>): Promise<T> {
        this.pending.push(promise.catch(() => undefined));
        return promise;
    }

    get currentPreset(): Preset {
        return presetByName(this.state.presetName);
    }

    async loadPreset(name: string): Promise<void> {
        const preset = presetByName(name);
        this.state.presetName = name;
        this.state.knobs = { ...DEFAULT_KNOBS, ...preset.knobDefaults };
        this.state.slideOffsetMm = 0;
        this.state.hairlineMm = 0;
        this.presetSelect.value = name;
        this.renderKnobs();
        await this.refreshRule();
        await this.refreshAnalyses();
        this.scheduleRead(true);
        await this.whenIdle();
    }

    async setKnob(key: keyof DesignKnobs, value: number): Promise<void> {
        if (!isFinite(value)) {
            return;
        }
        this.state.knobs[key] = value;
        await this.refreshRule();
        await this.refreshAnalyses();
        this.scheduleRead(true);
        await this.whenIdle();
    }

    setHairline(mm: number): void {
        this.state.hairlineMm = this.ruleView.clampHairline(mm);
        this.scheduleRead();
    }

    setSlideOffset(mm: number): void {
        this.state.slideOffsetMm = mm;
        this.ruleView.setSlideOffset(mm);
        this.moveSlideGroup();
        this.scheduleRead();
    }

    /** Move the already-rendered slide strip without a round trip. */
    private moveSlideGroup(): void {
        const group = this.ruleView.element.querySelector(".slide-group");
        if (group) {
            group.setAttribute(
                "transform",
                `translate(${this.state.slideOffsetMm * this.pxPerMm} 0)`,
            );
        }
    }

    async setTriangleLeg(a: number): Promise<void> {
        this.state.triangleLeg = a;
        await this.refreshTriangle();
    }

    // -- networking ---------------------------------------------------------

    private async refreshRule(): Promise<void> {
        const preset = this.currentPreset;
        const layout = preset.layout(this.state.knobs, this.registry);
        this.state.layout = layout;
        try {
            const response = await this.api.rule(layout);
            this.pxPerMm = response.px_per_mm;
            this.ruleView.setGeometry(response.px_per_mm, response.margins_mm, response.length_mm);
            this.ruleView.setSlideOffset(this.state.slideOffsetMm);
            this.ruleView.setSvg(response.svg);
            this.moveSlideGroup();
            this.showError(null);
        } catch (err) {
            this.showError(err);
        }
    }

    private scheduleRead(immediate = false): void {
        if (this.readTimer !== null) {
            clearTimeout(this.readTimer);
            this.readTimer = null;
        }
        if (immediate) {
            this.requestReadouts();
            return;
        }
        this.readTimer = setTimeout(() => {
            this.readTimer = null;
            this.requestReadouts();
        }, READ_DEBOUNCE_MS);
    }

    private requestReadouts(): void {
        if (!this.state.layout) {
            return;
        }
        const token = this.readGate.next();
        const { layout, slideOffsetMm, hairlineMm } = this.state;
        this.track(
            this.api
                .read(layout, slideOffsetMm, hairlineMm)
                .then((readouts) => {
                    if (this.readGate.isCurrent(token)) {
                        this.state.lastReadouts = readouts;
                        this.renderReadouts();
                    }
                })
                .catch((err) => this.showError(err)),
        );
    }

    private async refreshAnalyses(): Promise<void> {
        const preset = this.currentPreset;
        const { knobs } = this.state;
        if (!preset.designScale) {
            this.state.lastAccuracy = null;
            this.state.lastAlignment = null;
            this.state.lastTriangle = null;
            this.renderAnalyses();
            return;
        }
        const design = preset.designScale(knobs);
        try {
            this.state.lastAccuracy = await this.api.analyzeAccuracy(
                design,
                knobs.hMm,
                knobs.separationFactor,
            );
            if (preset.partnerScale) {
                this.state.lastAlignment = await this.api.analyzeAlignment(
                    design,
                    preset.partnerScale(knobs),
                );
            } else {
                this.state.lastAlignment = null;
            }
            this.showError(null);
        } catch (err) {
            this.showError(err);
        }
        this.renderAnalyses();
        await this.refreshTriangle();
    }

    private async refreshTriangle(): Promise<void> {
        const preset = this.currentPreset;
        if (!preset.designScale) {
            return;
        }
        try {
            this.state.lastTriangle = await this.api.analyzeTriangle(
                preset.designScale(this.state.knobs),
                this.state.triangleLeg,
                this.state.knobs.hMm,
            );
            this.showError(null);
        } catch (err) {
            this.state.lastTriangle = null;
            this.showError(err);
        }
        this.renderTriangle();
    }

    // -- DOM ------------------------------------------------------------------

    private buildShell(): void {
        const doc = this.doc;
        this.root.classList.add("explorer");

        const header = doc.createElement("header");
        this.presetSelect = doc.createElement("select");
        this.presetSelect.className = "preset-select";
        for (const preset of PRESETS) {
            const option = doc.createElement("option");
            option.value = preset.name;
            option.textContent = preset.name;
            this.presetSelect.appendChild(option);
        }
        this.presetSelect.addEventListener("change", () => {
            this.track(this.loadPreset(this.presetSelect.value));
        });
        header.appendChild(this.presetSelect);
        this.errorBox = doc.createElement("div");
        this.errorBox.className = "error-box";
        header.appendChild(this.errorBox);
        this.root.appendChild(header);

        this.knobPanel = doc.createElement("div");
        this.knobPanel.className = "knob-panel";
        this.root.appendChild(this.knobPanel);

        const chips = doc.createElement("div");
        chips.className = "chips";
        this.accuracyChip = doc.createElement("span");
        this.accuracyChip.className = "chip chip-accuracy";
        this.alignmentChip = doc.createElement("span");
        this.alignmentChip.className = "chip chip-alignment";
        this.warningChip = doc.createElement("span");
        this.warningChip.className = "chip chip-warning";
        chips.append(this.accuracyChip, this.alignmentChip, this.warningChip);
        this.root.appendChild(chips);

        this.root.appendChild(this.ruleView.element);

        this.readoutTable = doc.createElement("table");
        this.readoutTable.className = "readouts";
        this.root.appendChild(this.readoutTable);

        this.triangleBox = doc.createElement("div");
        this.triangleBox.className = "triangle-box";
        this.root.appendChild(this.triangleBox);
    }

    private renderKnobs(): void {
        const preset = this.currentPreset;
        this.knobPanel.innerHTML = "";
        const doc = this.doc;
        const blurb = doc.createElement("p");
        blurb.textContent = preset.blurb;
        this.knobPanel.appendChild(blurb);
        const entries: Array<[keyof DesignKnobs, string, number]> = [
            ["lengthMm", "rule length (mm)", 1],
            ["hMm", "legibility h (mm)", 0.01],
        ];
        if (preset.designScale) {
            entries.push(
                ["separationFactor", "separation factor", 0.001],
                ["alpha", "exponent", 0.1],
                ["xMax", "top value", 1],
                ["tCandidate", "companion ratio T", 0.0001],
            );
        }
        for (const [key, label, step] of entries) {
            const wrap = doc.createElement("label");
            wrap.className = `knob knob-${key}`;
            const span = doc.createElement("span");
            span.textContent = label;
            const input = doc.createElement("input");
            input.type = "number";
            input.step = String(step);
            input.value = String(this.state.knobs[key]);
            input.addEventListener("change", () => {
                this.track(this.setKnob(key, Number.parseFloat(input.value)));
            });
            wrap.append(span, input);
            this.knobPanel.appendChild(wrap);
        }
    }

    private renderReadouts(): void {
        this.readoutTable.innerHTML = "";
        const doc = this.doc;
        for (const readout of this.state.lastReadouts) {
            const row = doc.createElement("tr");
            row.className = readout.in_range ? "readout" : "readout out-of-range";
            row.dataset.scale = readout.scale;
            const name = doc.createElement("td");
            name.textContent = readout.scale;
            const value = doc.createElement("td");
            value.className = "value";
            value.textContent = readout.value === undefined ? "—" : formatValue(readout.value);
            row.append(name, value);
            this.readoutTable.appendChild(row);
        }
    }

    private renderAnalyses(): void {
        const accuracy = this.state.lastAccuracy;
        if (!accuracy) {
            this.accuracyChip.textContent = "";
            this.alignmentChip.textContent = "";
            this.warningChip.textContent = "";
            this.warningChip.classList.remove("active");
            return;
        }
        if (!accuracy.feasible || accuracy.resolvable_x_bound === null) {
            this.accuracyChip.textContent = "no readable values at this h";
        } else {
            this.accuracyChip.textContent = `readable from x = ${formatValue(accuracy.resolvable_x_bound)}`;
        }
        const alignment = this.state.lastAlignment;
        if (alignment) {
            this.alignmentChip.textContent = `T = ${formatValue(alignment.T)}`;
            if (alignment.equivalent && alignment.rational_witness) {
                const { p, q, exp10 } = alignment.rational_witness;
                this.warningChip.textContent =
                    `equivalent scales: T ≈ ${p}/${q}·10^${exp10}, the companion adds nothing`;
                this.warningChip.classList.add("active");
            } else {
                this.warningChip.textContent = "ratio is awkward enough to be useful";
                this.warningChip.classList.remove("active");
            }
        } else {
            this.alignmentChip.textContent = "";
            this.warningChip.textContent = "";
            this.warningChip.classList.remove("active");
        }
    }

    private renderTriangle(): void {
        this.triangleBox.innerHTML = "";
        const report = this.state.lastTriangle;
        const preset = this.currentPreset;
        if (!report || !preset.designScale) {
            return;
        }
        const doc = this.doc;
        const title = doc.createElement("h3");
        title.textContent = "right triangles with this leg";
        this.triangleBox.appendChild(title);

        const slider = doc.createElement("input");
        slider.type = "range";
        slider.className = "triangle-leg";
        slider.min = "1";
        slider.max = String(this.state.knobs.xMax);
        slider.step = "0.5";
        slider.value = String(this.state.triangleLeg);
        slider.addEventListener("change", () => {
            this.track(this.setTriangleLeg(Number.parseFloat(slider.value)));
        });
        this.triangleBox.appendChild(slider);

        const angles = doc.createElement("div");
        angles.className = "triangle-angles";
        angles.textContent = report.feasible
            ? `angle range ${formatValue(report.angle_low)}° to ${formatValue(report.angle_high)}°`
            : "no solvable triangle with this leg";
        this.triangleBox.appendChild(angles);

        const bars = doc.createElement("div");
        bars.className = "triangle-bars";
        for (const [label, interval] of [
            ["other leg", report.b_interval],
            ["hypotenuse", report.c_interval],
        ] as const) {
            const row = doc.createElement("div");
            row.className = `bar bar-${label.replace(" ", "-")}`;
            const caption = doc.createElement("span");
            caption.className = "bar-caption";
            if (interval) {
                caption.textContent = `${label}: ${formatValue(interval[0])} to ${formatValue(interval[1])}`;
                const track = doc.createElement("div");
                track.className = "bar-track";
                const fill = doc.createElement("div");
                fill.className = "bar-fill";
                const lo = this.state.lastAccuracy?.resolvable_x_bound ?? 0;
                const hi = this.state.knobs.xMax;
                const span = Math.max(hi - lo, 1e-9);
                fill.style.left = `${((interval[0] - lo) / span) * 100}%`;
                fill.style.width = `${((interval[1] - interval[0]) / span) * 100}%`;
                track.appendChild(fill);
                row.append(caption, track);
            } else {
                caption.textContent = `${label}: empty`;
                row.appendChild(caption);
            }
            bars.appendChild(row);
        }
        this.triangleBox.appendChild(bars);

        if (report.feasible) {
            const arc = doc.createElementNS("http://www.w3.org/2000/svg", "svg");
            arc.setAttribute("class", "angle-arc");
            arc.setAttribute("viewBox", "0 0 100 60");
            arc.setAttribute("width", "100");
            arc.setAttribute("height", "60");
            const toXY = (deg: number): [number, number] => {
                const rad = (deg * Math.PI) / 180;
                return [10 + 80 * Math.cos(rad), 55 - 50 * Math.sin(rad)];
            };
            const [x1, y1] = toXY(report.angle_low);
            const [x2, y2] = toXY(report.angle_high);
            const path = this.doc.createElementNS("http://www.w3.org/2000/svg", "path");
            path.setAttribute(
                "d",
                `M 10 55 L ${x1.toFixed(2)} ${y1.toFixed(2)} A 80 50 0 0 0 ${x2.toFixed(2)} ${y2.toFixed(2)} Z`,
            );
            path.setAttribute("class", "arc-fill");
            arc.appendChild(path);
            this.triangleBox.appendChild(arc);
        }
    }

    private showError(err: unknown): void {
        if (err === null) {
            this.errorBox.textContent = "";
            this.errorBox.classList.remove("active");
            return;
        }
        const message = err instanceof Error ? err.message : String(err);
        this.errorBox.textContent = message;
        this.errorBox.classList.add("active");
    }
}
