// Canvas explorer: click to press lights, pick pairs for what-if edits,
// ask the service for solutions.  Layout is cosmetic; drag to reposition.

import { ApiClient } from "./api.js";
import { BoardController } from "./controller.js";
import {
    BoardGraph,
    addVertex,
    completeGraph,
    cycleGraph,
    describePendingEdit,
    emptyGraph,
    gridGraph,
    pathGraph,
} from "./model.js";

const canvas = document.getElementById("board") as HTMLCanvasElement;
const ctx = canvas.getContext("2d") as CanvasRenderingContext2D;
const statusLine = document.getElementById("status") as HTMLDivElement;
const bannerBox = document.getElementById("banner") as HTMLDivElement;
const editBox = document.getElementById("pending-edit") as HTMLDivElement;
const modeSelect = document.getElementById("mode") as HTMLSelectElement;
const presetSelect = document.getElementById("preset") as HTMLSelectElement;
const sizeInput = document.getElementById("size") as HTMLInputElement;

const VERTEX_RADIUS = 16;
const CLASS_COLORS: Record<string, string> = { AO: "#2e9e44", NO: "#7a7a7a", HO: "#e08a00" };

const controller = new BoardController(
    new ApiClient(""),
    cycleGraph(5),
    render,
    canvas.width,
    canvas.height,
);

let editAnchor: number | null = null;
let dragging: { vertex: number; moved: boolean } | null = null;

function buildPreset(): BoardGraph {
    const n = Math.max(1, Math.min(24, Number(sizeInput.value) || 5));
    switch (presetSelect.value) {
        case "path":
            return pathGraph(n);
        case "complete":
            return completeGraph(n);
        case "empty":
            return emptyGraph(n);
        case "grid":
            return gridGraph(Math.max(1, Math.floor(n / 2)), 2);
        default:
            return cycleGraph(n);
    }
}

function vertexAt(x: number, y: number): number | null {
    const { positions } = controller.state;
    for (let v = positions.length - 1; v >= 0; v--) {
        const dx = positions[v].x - x;
        const dy = positions[v].y - y;
        if (dx * dx + dy * dy <= VERTEX_RADIUS * VERTEX_RADIUS) return v;
    }
    return null;
}

function canvasPoint(ev: MouseEvent): { x: number; y: number } {
    const rect = canvas.getBoundingClientRect();
    return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
}

canvas.addEventListener("mousedown", (ev) => {
    const { x, y } = canvasPoint(ev);
    const v = vertexAt(x, y);
    if (v !== null) dragging = { vertex: v, moved: false };
});

canvas.addEventListener("mousemove", (ev) => {
    if (dragging === null) return;
    const { x, y } = canvasPoint(ev);
    dragging.moved = true;
    controller.state.positions[dragging.vertex] = { x, y };
    render();
});

canvas.addEventListener("mouseup", (ev) => {
    const wasDrag = dragging !== null && dragging.moved;
    const pressed = dragging?.vertex ?? null;
    dragging = null;
    if (wasDrag) return;
    const { x, y } = canvasPoint(ev);
    const v = pressed ?? vertexAt(x, y);
    if (v === null) {
        if (ev.detail === 2) {
            controller.state = addVertex(controller.state, { x, y });
            void controller.refreshAnalysis();
        }
        return;
    }
    if (modeSelect.value === "play") {
        controller.press(v);
        return;
    }
    if (editAnchor === null) {
        editAnchor = v;
        render();
        return;
    }
    if (editAnchor !== v) void controller.requestWhatif(editAnchor, v);
    editAnchor = null;
});

(document.getElementById("build") as HTMLButtonElement).onclick = () => {
    editAnchor = null;
    void controller.setGraph(buildPreset(), canvas.width, canvas.height);
};
(document.getElementById("all-on") as HTMLButtonElement).onclick = () => controller.setLights(true);
(document.getElementById("all-off") as HTMLButtonElement).onclick = () => controller.setLights(false);
(document.getElementById("solve") as HTMLButtonElement).onclick = () => void controller.requestSolution();
(document.getElementById("analyze") as HTMLButtonElement).onclick = () => void controller.refreshAnalysis();

bannerBox.onclick = () => controller.dismissBanner();

function describeEdit(): string {
    const edit = controller.state.pendingEdit;
    return edit === null ? "" : describePendingEdit(edit);
}

function render(): void {
    const state = controller.state;
    ctx.clearRect(0, 0, canvas.width, canvas.height);

    ctx.strokeStyle = "#555";
    ctx.lineWidth = 2;
    for (const [u, v] of state.graph.edges) {
        ctx.beginPath();
        ctx.moveTo(state.positions[u].x, state.positions[u].y);
        ctx.lineTo(state.positions[v].x, state.positions[v].y);
        ctx.stroke();
    }

    const edit = state.pendingEdit;
    if (edit !== null) {
        ctx.strokeStyle = edit.response.action === "add" ? "#2e9e44" : "#c0392b";
        ctx.setLineDash([6, 4]);
        ctx.beginPath();
        ctx.moveTo(state.positions[edit.u].x, state.positions[edit.u].y);
        ctx.lineTo(state.positions[edit.v].x, state.positions[edit.v].y);
        ctx.stroke();
        ctx.setLineDash([]);
    }

    for (let v = 0; v < state.graph.n; v++) {
        const { x, y } = state.positions[v];
        ctx.beginPath();
        ctx.arc(x, y, VERTEX_RADIUS, 0, 2 * Math.PI);
        ctx.fillStyle = state.lights[v] ? "#ffd23f" : "#20242b";
        ctx.fill();
        const tag = state.lastAnalysis?.vertexClasses[v];
        ctx.lineWidth = 3;
        ctx.strokeStyle = tag !== undefined ? CLASS_COLORS[tag] ?? "#555" : "#555";
        ctx.stroke();
        if (state.solutionOverlay?.includes(v)) {
            ctx.beginPath();
            ctx.arc(x, y, VERTEX_RADIUS + 6, 0, 2 * Math.PI);
            ctx.strokeStyle = "#4aa3ff";
            ctx.lineWidth = 2;
            ctx.stroke();
        }
        if (editAnchor === v) {
            ctx.beginPath();
            ctx.arc(x, y, VERTEX_RADIUS + 10, 0, 2 * Math.PI);
            ctx.strokeStyle = "#b86bff";
            ctx.stroke();
        }
        ctx.fillStyle = state.lights[v] ? "#20242b" : "#d8d8d8";
        ctx.font = "12px sans-serif";
        ctx.textAlign = "center";
        ctx.textBaseline = "middle";
        ctx.fillText(String(v), x, y);
    }

    const analysis = state.lastAnalysis;
    statusLine.textContent =
        analysis === null
            ? "analysis pending…"
            : `ν = ${analysis.nullity} · ${analysis.alwaysSolvable ? "always solvable" : "not always solvable"}` +
              ` · ${analysis.oddDominatingCount} odd dominating pattern(s)` +
              (state.certificate !== null ? ` · unsolvable, certificate ${state.certificate}` : "");

    bannerBox.textContent = controller.banner ?? "";
    bannerBox.style.display = controller.banner === null ? "none" : "block";

    editBox.textContent = describeEdit();
    (document.getElementById("commit") as HTMLButtonElement).style.display =
        edit === null ? "none" : "inline-block";
    (document.getElementById("cancel") as HTMLButtonElement).style.display =
        edit === null ? "none" : "inline-block";
}

(document.getElementById("commit") as HTMLButtonElement).onclick = () =>
    void controller.commitPendingEdit();
(document.getElementById("cancel") as HTMLButtonElement).onclick = () =>
    controller.dismissPendingEdit();

void controller.refreshAnalysis();
