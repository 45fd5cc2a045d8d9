// Typed client for the scale engine's JSON API. The explorer displays
// only numbers that came out of this client; it never recomputes scale
// math locally.

export interface ScaleSpecJson {
    name: string;
    kind: string;
    params: Record<string, number>;
    length_mm: number;
    unit?: number;
    zoom?: number;
    x_min?: number;
    x_max?: number;
    units_label?: string;
    orientation?: string;
}

export interface TickJson {
    value: number | null;
    pos_mm: number;
    level: number;
    label?: string;
}

export interface TickSetJson {
    scale_name: string;
    warnings: string[];
    ticks: TickJson[];
}

export interface LayoutJson {
    body_top: ScaleSpecJson[];
    slide: ScaleSpecJson[];
    body_bottom: ScaleSpecJson[];
    row_height_mm?: number;
    margins_mm?: number;
}

export interface RuleResponse {
    length_mm: number;
    row_height_mm: number;
    margins_mm: number;
    px_per_mm: number;
    tick_sets: TickSetJson[];
    svg: string;
}

export interface ReadOutJson {
    scale: string;
    value?: number;
    in_range: boolean;
}

export interface AccuracyReportJson {
    feasible: boolean;
    binding_end: string;
    required_u: number | null;
    resolvable_x_bound: number | null;
}

export interface RationalWitnessJson {
    p: number;
    q: number;
    exp10: number;
}

export interface AlignmentReportJson {
    T: number;
    aligned_pair_rule: string;
    equivalent: boolean;
    rational_witness: RationalWitnessJson | null;
}

export interface TriangleReportJson {
    a: number;
    tau1: number;
    tau2: number;
    angle_low: number;
    angle_high: number;
    b_interval: [number, number] | null;
    c_interval: [number, number] | null;
    feasible: boolean;
}

export interface RegistryEntryJson {
    name: string;
    kind: string;
    params: Record<string, number>;
    zoom: number;
    x_min: number;
    x_max: number;
    units_label: string;
    description: string;
}

export interface ApiErrorJson {
    code: string;
    message: string;
    detail: string;
}

export class ApiError extends Error {
    constructor(readonly status: number, readonly payload: ApiErrorJson) {
        super(payload.message);
    }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
    constructor(
        readonly baseUrl: string,
        private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const response = await this.fetchFn(`${this.baseUrl}${path}`, {
            method,
            headers: body === undefined ? undefined : { "content-type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        const payload = await response.json();
        if (!response.ok) {
            throw new ApiError(response.status, payload as ApiErrorJson);
        }
        return payload as T;
    }

    registry(): Promise<RegistryEntryJson[]> {
        return this.request("GET", "/registry");
    }

    rule(layout: LayoutJson): Promise<RuleResponse> {
        return this.request("POST", "/rule", layout);
    }

    read(layout: LayoutJson, slideOffsetMm: number, hairlineMm: number): Promise<ReadOutJson[]> {
        return this.request("POST", "/read", {
            layout,
            slide_offset_mm: slideOffsetMm,
            hairline_mm: hairlineMm,
        });
    }

    analyzeAccuracy(
        scale: ScaleSpecJson,
        hMm: number,
        separationFactor: number,
    ): Promise<AccuracyReportJson> {
        return this.request("POST", "/analyze/accuracy", {
            scale,
            h: hMm,
            separation_factor: separationFactor,
        });
    }

    analyzeAlignment(scale1: ScaleSpecJson, scale2: ScaleSpecJson): Promise<AlignmentReportJson> {
        return this.request("POST", "/analyze/alignment", { scale1, scale2 });
    }

    analyzeTriangle(scale: ScaleSpecJson, a: number, hMm: number): Promise<TriangleReportJson> {
        return this.request("POST", "/analyze/triangle", { scale, a, h: hMm });
    }
}

/** Monotone sequence gate: stale async responses are dropped so the
 *  newest request always wins. */
export class LatestGate {
    private seq = 0;

    next(): number {
        return ++this.seq;
    }

    isCurrent(token: number): boolean {
        return token === this.seq;
    }
}
