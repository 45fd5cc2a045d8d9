// SVG viewport with pointer handling: dragging on the slide strip moves
// the slide, anywhere else moves the hairline. Pixel deltas convert to
// mm through the px_per_mm the service reported, nothing else.

export interface RuleViewCallbacks {
    onHairline(mm: number): void;
    onSlideOffset(mm: number): void;
}

interface DragState {
    kind: "slide" | "hairline";
    startClientX: number;
    startValueMm: number;
}

export class RuleView {
    readonly element: HTMLDivElement;
    private pxPerMm = 4;
    private marginsMm = 10;
    private lengthMm = 250;
    private slideOffsetMm = 0;
    private drag: DragState | null = null;

    constructor(
        doc: Document,
        private readonly callbacks: RuleViewCallbacks,
    ) {
        this.element = doc.createElement("div");
        this.element.className = "rule-view";
        this.element.addEventListener("pointerdown", (ev) => this.onPointerDown(ev as PointerEvent));
        const win = doc.defaultView;
        if (win) {
            win.addEventListener("pointermove", (ev) => this.onPointerMove(ev as PointerEvent));
            win.addEventListener("pointerup", () => (this.drag = null));
        }
    }

    setGeometry(pxPerMm: number, marginsMm: number, lengthMm: number): void {
        this.pxPerMm = pxPerMm;
        this.marginsMm = marginsMm;
        this.lengthMm = lengthMm;
    }

    setSlideOffset(mm: number): void {
        this.slideOffsetMm = mm;
    }

    setSvg(svg: string): void {
        this.element.innerHTML = svg;
    }

    clampHairline(mm: number): number {
        return Math.min(Math.max(mm, 0), this.lengthMm);
    }

    /** Horizontal pixel offset inside the view mapped to body mm. */
    private eventToMm(ev: PointerEvent): number {
        const rect = this.element.getBoundingClientRect();
        return (ev.clientX - rect.left) / this.pxPerMm - this.marginsMm;
    }

    private onPointerDown(ev: PointerEvent): void {
        const target = ev.target as Element | null;
        const onSlide = Boolean(target && target.closest && target.closest(".slide-group"));
        if (onSlide) {
            this.drag = {
                kind: "slide",
                startClientX: ev.clientX,
                startValueMm: this.slideOffsetMm,
            };
            return;
        }
        const mm = this.clampHairline(this.eventToMm(ev));
        this.drag = { kind: "hairline", startClientX: ev.clientX, startValueMm: mm };
        this.callbacks.onHairline(mm);
    }

    private onPointerMove(ev: PointerEvent): void {
        if (!this.drag) {
            return;
        }
        const deltaMm = (ev.clientX - this.drag.startClientX) / this.pxPerMm;
        if (this.drag.kind === "slide") {
            const next = this.drag.startValueMm + deltaMm;
            this.slideOffsetMm = next;
            this.callbacks.onSlideOffset(next);
        } else {
            this.callbacks.onHairline(this.clampHairline(this.drag.startValueMm + deltaMm));
        }
    }
}
