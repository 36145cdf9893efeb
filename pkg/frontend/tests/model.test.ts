import { describe, expect, it } from "vitest";

import {
    closedNeighborhood,
    completeGraph,
    createBoard,
    cycleGraph,
    describePendingEdit,
    gridGraph,
    hasEdge,
    lightsToConfig,
    pathGraph,
    patternToVertices,
    pressVertex,
    setAllLights,
    toggleEdge,
} from "../src/model.js";

const K2 = completeGraph(2);
const P3 = pathGraph(3);
const C5 = cycleGraph(5);

describe("pressVertex", () => {
    it("flips the closed neighborhood", () => {
        let state = createBoard(K2);
        state = pressVertex(state, 0);
        expect(state.lights).toEqual([true, true]);
    });

    it("is an involution", () => {
        let state = createBoard(P3);
        state = pressVertex(pressVertex(state, 1), 1);
        expect(state.lights).toEqual([false, false, false]);
    });

    it("pressing every vertex of an all-on five-cycle turns it off", () => {
        let state = setAllLights(createBoard(C5), true);
        for (let v = 0; v < 5; v++) state = pressVertex(state, v);
        expect(state.lights).toEqual([false, false, false, false, false]);
    });

    it("walks a solving pattern down to all-off", () => {
        // the unique solving pattern for all-on lights on a 3-path is 010
        let state = setAllLights(createBoard(P3), true);
        state = { ...state, solutionOverlay: patternToVertices("010") };
        for (const v of [...state.solutionOverlay!]) {
            state = pressVertex(state, v);
        }
        expect(state.lights).toEqual([false, false, false]);
        expect(state.solutionOverlay).toEqual([]);
    });
});

describe("graph edits", () => {
    it("toggles an absent edge on", () => {
        const g = toggleEdge(C5, 0, 2);
        expect(hasEdge(g, 0, 2)).toBe(true);
        expect(g.edges.length).toBe(6);
    });

    it("toggles a present edge off", () => {
        const g = toggleEdge(C5, 0, 1);
        expect(hasEdge(g, 0, 1)).toBe(false);
        expect(g.edges.length).toBe(4);
    });

    it("rejects loops", () => {
        expect(() => toggleEdge(C5, 2, 2)).toThrow();
    });
});

describe("builders and helpers", () => {
    it("builds the five-cycle", () => {
        expect(C5.edges).toEqual([
            [0, 1],
            [1, 2],
            [2, 3],
            [3, 4],
            [0, 4],
        ]);
    });

    it("builds a grid", () => {
        const g = gridGraph(2, 2);
        expect(g.n).toBe(4);
        expect(g.edges.length).toBe(4);
    });

    it("computes closed neighborhoods", () => {
        expect(closedNeighborhood(P3, 1).sort()).toEqual([0, 1, 2]);
    });

    it("serializes lights with coordinate 0 leftmost", () => {
        expect(lightsToConfig([true, false, true])).toBe("101");
        expect(patternToVertices("101")).toEqual([0, 2]);
    });

    it("formats a pending what-if for display", () => {
        const text = describePendingEdit({
            u: 0,
            v: 2,
            response: {
                action: "add",
                deltaNu: 0,
                beforeClasses: { u: "AO", v: "AO" },
                afterClasses: { u: "AO", v: "AO" },
                additionType: "Type2",
            },
        });
        expect(text).toContain("Δν 0");
        expect(text).toContain("Type-2");
    });
});
