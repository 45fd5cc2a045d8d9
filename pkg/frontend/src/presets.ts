// Shipped layouts for the usual exploration setups. Scale geometry is
// specified by value ranges; the engine derives the units. Registry
// entries supply the conventional ranges so nothing is duplicated here.

import type { LayoutJson, RegistryEntryJson, ScaleSpecJson } from "./api.js";

export interface DesignKnobs {
    lengthMm: number;
    hMm: number;
    separationFactor: number;
    alpha: number;
    xMax: number;
    tCandidate: number;
}

export interface Preset {
    name: string;
    blurb: string;
    layout: (knobs: DesignKnobs, registry: RegistryEntryJson[]) => LayoutJson;
    /** Scale whose accuracy/alignment/triangle panels are live, if any. */
    designScale?: (knobs: DesignKnobs) => ScaleSpecJson;
    /** Partner for the alignment ratio panel, if any. */
    partnerScale?: (knobs: DesignKnobs) => ScaleSpecJson;
    knobDefaults: Partial<DesignKnobs>;
}

function logScale(name: string, lengthMm: number, xMax = 10, zoom = 1): ScaleSpecJson {
    return {
        name,
        kind: "log",
        params: { base: 10 },
        length_mm: lengthMm,
        x_min: 1,
        x_max: xMax,
        zoom,
    };
}

function powerScale(
    name: string,
    alpha: number,
    lengthMm: number,
    xMin: number,
    xMax: number,
): ScaleSpecJson {
    return { name, kind: "power", params: { alpha }, length_mm: lengthMm, x_min: xMin, x_max: xMax };
}

function registryScale(registry: RegistryEntryJson[], name: string, lengthMm: number): ScaleSpecJson {
    const entry = registry.find((e) => e.name === name);
    if (!entry) {
        throw new Error(`scale ${name} missing from the service registry`);
    }
    return {
        name: entry.name,
        kind: entry.kind,
        params: entry.params,
        length_mm: lengthMm,
        x_min: entry.x_min,
        x_max: entry.x_max,
        zoom: entry.zoom,
        units_label: entry.units_label,
    };
}

export const PRESETS: Preset[] = [
    {
        name: "Quadratic accuracy study",
        blurb: "One square-law scale: tune its top value, the legibility h and the ratio to a companion scale.",
        knobDefaults: { alpha: 2, xMax: 100, tCandidate: 7.1429 },
        layout: (k) => ({
            body_top: [powerScale("Q", k.alpha, k.lengthMm, 0, k.xMax)],
            slide: [],
            body_bottom: [],
        }),
        designScale: (k) => powerScale("Q", k.alpha, k.lengthMm, 0, k.xMax),
        partnerScale: (k) => powerScale("Q2", k.alpha, k.lengthMm, 0, k.xMax * k.tCandidate),
    },
    {
        name: "Reciprocal scale",
        blurb: "The 1/x scale running backwards from infinity at the origin mark.",
        knobDefaults: {},
        layout: (k) => ({
            body_top: [powerScale("R", -1, k.lengthMm, 0.6, 10)],
            slide: [],
            body_bottom: [],
        }),
    },
    {
        name: "C/R coincidence",
        blurb: "Base scale over a unit-matched reciprocal: one hairline reads x and 1/log10(x).",
        knobDefaults: {},
        layout: (k) => ({
            body_top: [logScale("C", k.lengthMm), powerScale("R", -1, k.lengthMm, 1, 100)],
            slide: [],
            body_bottom: [],
        }),
    },
    {
        name: "C over D classic",
        blurb: "The traditional multiplying pair: drag the slide, read products on D.",
        knobDefaults: {},
        layout: (k) => ({
            body_top: [logScale("D", k.lengthMm)],
            slide: [logScale("C", k.lengthMm)],
            body_bottom: [],
        }),
    },
    {
        name: "Horizon family",
        blurb: "Heights on G4/G5 against the equidistant horizon-length companion G6 (km).",
        knobDefaults: {},
        layout: (k, registry) => ({
            body_top: [
                registryScale(registry, "G4", k.lengthMm),
                registryScale(registry, "G6", k.lengthMm),
            ],
            slide: [],
            body_bottom: [],
        }),
    },
];

export const DEFAULT_KNOBS: DesignKnobs = {
    lengthMm: 250,
    hMm: 0.5,
    separationFactor: 1.01,
    alpha: 2,
    xMax: 100,
    tCandidate: 7.1429,
};

export function presetByName(name: string): Preset {
    const preset = PRESETS.find((p) => p.name === name);
    if (!preset) {
        throw new Error(`unknown preset: ${name}`);
    }
    return preset;
}
