// Client-side board model.  All game math (light toggles, edge edits,
// layout) happens here; the server is only asked for linear algebra.

export interface BoardGraph {
    n: number;
    edges: [number, number][];
}

export interface Point {
    x: number;
    y: number;
}

export interface AnalyzeResponse {
    nullity: number;
    alwaysSolvable: boolean;
    vertexClasses: string[];
    oddDominatingCount: number;
}

export interface WhatifResponse {
    action: "add" | "remove";
    deltaNu: number;
    beforeClasses: { u: string; v: string };
    afterClasses: { u: string; v: string };
    additionType?: string;
}

export interface SolveResponse {
    solvable: boolean;
    pattern?: string;
    solutionCount?: number;
    certificate?: string;
}

export interface PendingEdit {
    u: number;
    v: number;
    response: WhatifResponse;
}

export interface BoardState {
    graph: BoardGraph;
    positions: Point[];
    lights: boolean[];
    lastAnalysis: AnalyzeResponse | null;
    pendingEdit: PendingEdit | null;
    solutionOverlay: number[] | null;
    certificate: string | null;
}

export function hasEdge(graph: BoardGraph, u: number, v: number): boolean {
    return graph.edges.some(([a, b]) => (a === u && b === v) || (a === v && b === u));
}

export function closedNeighborhood(graph: BoardGraph, v: number): number[] {
    const out = [v];
    for (const [a, b] of graph.edges) {
        if (a === v) out.push(b);
        else if (b === v) out.push(a);
    }
    return out;
}

export function circularLayout(n: number, width: number, height: number): Point[] {
    const cx = width / 2;
    const cy = height / 2;
    const r = Math.max(40, Math.min(width, height) / 2 - 60);
    return Array.from({ length: n }, (_, i) => {
        const angle = (2 * Math.PI * i) / n - Math.PI / 2;
        return { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) };
    });
}

export function createBoard(graph: BoardGraph, width = 640, height = 480): BoardState {
    return {
        graph,
        positions: circularLayout(graph.n, width, height),
        lights: new Array(graph.n).fill(false),
        lastAnalysis: null,
        pendingEdit: null,
        solutionOverlay: null,
        certificate: null,
    };
}

// Pressing a vertex flips it and its neighbors; a pressed vertex is also
// checked off the solution overlay so the player can walk a pattern down.
export function pressVertex(state: BoardState, v: number): BoardState {
    if (v < 0 || v >= state.graph.n) return state;
    const lights = state.lights.slice();
    for (const w of closedNeighborhood(state.graph, v)) {
        lights[w] = !lights[w];
    }
    let overlay = state.solutionOverlay;
    if (overlay !== null) {
        overlay = overlay.includes(v) ? overlay.filter((w) => w !== v) : [...overlay, v];
    }
    return { ...state, lights, solutionOverlay: overlay, certificate: null };
}

export function setAllLights(state: BoardState, on: boolean): BoardState {
    return {
        ...state,
        lights: new Array(state.graph.n).fill(on),
        solutionOverlay: null,
        certificate: null,
    };
}

export function toggleEdge(graph: BoardGraph, u: number, v: number): BoardGraph {
    if (u === v) throw new Error("loops are not allowed");
    const [a, b] = u < v ? [u, v] : [v, u];
    if (hasEdge(graph, a, b)) {
        return {
            n: graph.n,
            edges: graph.edges.filter(([x, y]) => !(x === a && y === b) && !(x === b && y === a)),
        };
    }
    return { n: graph.n, edges: [...graph.edges, [a, b]] };
}

export function addVertex(state: BoardState, at: Point): BoardState {
    return {
        ...state,
        graph: { n: state.graph.n + 1, edges: state.graph.edges },
        positions: [...state.positions, at],
        lights: [...state.lights, false],
        lastAnalysis: null,
        solutionOverlay: null,
        certificate: null,
    };
}

export function lightsToConfig(lights: boolean[]): string {
    return lights.map((b) => (b ? "1" : "0")).join("");
}

export function describePendingEdit(edit: PendingEdit): string {
    const r = edit.response;
    const dnu = r.deltaNu > 0 ? `+${r.deltaNu}` : `${r.deltaNu}`;
    const type = r.additionType ? ` · ${r.additionType.replace("Type", "Type-")}` : "";
    return (
        `${r.action} (${edit.u},${edit.v}): Δν ${dnu}${type} · ` +
        `u ${r.beforeClasses.u}→${r.afterClasses.u}, v ${r.beforeClasses.v}→${r.afterClasses.v}`
    );
}

export function patternToVertices(pattern: string): number[] {
    const out: number[] = [];
    for (let i = 0; i < pattern.length; i++) {
        if (pattern[i] === "1") out.push(i);
    }
    return out;
}

// Preset builders for the toolbar.
export function pathGraph(n: number): BoardGraph {
    return { n, edges: Array.from({ length: n - 1 }, (_, i) => [i, i + 1] as [number, number]) };
}

export function cycleGraph(n: number): BoardGraph {
    if (n < 3) return pathGraph(n);
    const edges = Array.from({ length: n }, (_, i) => [i, (i + 1) % n] as [number, number]);
    return { n, edges: edges.map(([a, b]) => (a < b ? [a, b] : [b, a]) as [number, number]) };
}

export function completeGraph(n: number): BoardGraph {
    const edges: [number, number][] = [];
    for (let u = 0; u < n; u++) for (let v = u + 1; v < n; v++) edges.push([u, v]);
    return { n, edges };
}

export function emptyGraph(n: number): BoardGraph {
    return { n, edges: [] };
}

export function gridGraph(rows: number, cols: number): BoardGraph {
    const edges: [number, number][] = [];
    for (let r = 0; r < rows; r++) {
        for (let c = 0; c < cols; c++) {
            const v = r * cols + c;
            if (c + 1 < cols) edges.push([v, v + 1]);
            if (r + 1 < rows) edges.push([v, v + cols]);
        }
    }
    return { n: rows * cols, edges };
}
