// Board controller: owns the state, talks to the API, and guards against
// stale responses with per-panel sequence numbers.  At most the latest
// request of each kind is allowed to land.

import { ApiClient, ApiError } from "./api.js";
import {
    BoardGraph,
    BoardState,
    createBoard,
    lightsToConfig,
    patternToVertices,
    pressVertex,
    setAllLights,
    toggleEdge,
} from "./model.js";

export class BoardController {
    state: BoardState;
    banner: string | null = null;

    private analysisSeq = 0;
    private whatifSeq = 0;
    private solveSeq = 0;

    constructor(
        private readonly api: ApiClient,
        graph: BoardGraph,
        private readonly onChange: () => void = () => {},
        width = 640,
        height = 480,
    ) {
        this.state = createBoard(graph, width, height);
    }

    press(v: number): void {
        this.state = pressVertex(this.state, v);
        this.onChange();
    }

    setLights(on: boolean): void {
        this.state = setAllLights(this.state, on);
        this.onChange();
    }

    setGraph(graph: BoardGraph, width = 640, height = 480): Promise<void> {
        this.state = createBoard(graph, width, height);
        this.banner = null;
        this.onChange();
        return this.refreshAnalysis();
    }

    dismissBanner(): void {
        this.banner = null;
        this.onChange();
    }

    async refreshAnalysis(): Promise<void> {
        const ticket = ++this.analysisSeq;
        try {
            const analysis = await this.api.analyze(this.state.graph);
            if (ticket !== this.analysisSeq) return; // superseded
            this.state = { ...this.state, lastAnalysis: analysis };
        } catch (err) {
            if (ticket !== this.analysisSeq) return;
            this.showError(err);
        }
        this.onChange();
    }

    async requestWhatif(u: number, v: number): Promise<void> {
        if (u === v || u < 0 || v < 0 || u >= this.state.graph.n || v >= this.state.graph.n) {
            this.banner = "pick two distinct vertices for a what-if edit";
            this.onChange();
            return;
        }
        const ticket = ++this.whatifSeq;
        try {
            const response = await this.api.whatif(this.state.graph, u, v);
            if (ticket !== this.whatifSeq) return;
            this.state = { ...this.state, pendingEdit: { u, v, response } };
        } catch (err) {
            if (ticket !== this.whatifSeq) return;
            this.showError(err);
        }
        this.onChange();
    }

    dismissPendingEdit(): void {
        this.state = { ...this.state, pendingEdit: null };
        this.onChange();
    }

    // Applies the previewed toggle; the cached analysis is dropped and
    // refetched before anything depending on it is drawn again.
    async commitPendingEdit(): Promise<void> {
        const edit = this.state.pendingEdit;
        if (edit === null) return;
        this.state = {
            ...this.state,
            graph: toggleEdge(this.state.graph, edit.u, edit.v),
            pendingEdit: null,
            lastAnalysis: null,
            solutionOverlay: null,
            certificate: null,
        };
        this.onChange();
        await this.refreshAnalysis();
    }

    async requestSolution(): Promise<void> {
        const ticket = ++this.solveSeq;
        const config = lightsToConfig(this.state.lights);
        try {
            const response = await this.api.solve(this.state.graph, config);
            if (ticket !== this.solveSeq) return;
            if (response.solvable && response.pattern !== undefined) {
                this.state = {
                    ...this.state,
                    solutionOverlay: patternToVertices(response.pattern),
                    certificate: null,
                };
            } else {
                this.state = {
                    ...this.state,
                    solutionOverlay: null,
                    certificate: response.certificate ?? null,
                };
            }
        } catch (err) {
            if (ticket !== this.solveSeq) return;
            this.showError(err);
        }
        this.onChange();
    }

    private showError(err: unknown): void {
        this.banner = err instanceof ApiError ? err.message : `unexpected error: ${String(err)}`;
    }
}
