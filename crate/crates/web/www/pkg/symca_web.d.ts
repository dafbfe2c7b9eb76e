/* tslint:disable */
/* eslint-disable */

export class Simulation {
    free(): void;
    [Symbol.dispose](): void;
    boundary(): Uint8Array;
    cellCount(): number;
    cells(): Uint8Array;
    clear(): void;
    /**
     * `[transient, period]`, or empty when no cycle shows up in time.
     */
    cycle(max_steps: number): Float64Array;
    describe(): string;
    /**
     * Flat `[a, b, …]` cell pairs.
     */
    edges(): Uint32Array;
    generation(): number;
    constructor(rule: string, lattice: string, width: number, height: number, layers: number, density: number, seed: bigint);
    /**
     * Flat `[x, y, depth, …]`.
     */
    points(yaw: number, pitch: number): Float64Array;
    population(): number;
    step(n: number): void;
    toggle(cell: number): void;
    valence(): number;
}

export function ruleSummary(rule: string, k: number): string;

export function tilingClass(p: number, k: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_simulation_free: (a: number, b: number) => void;
    readonly ruleSummary: (a: number, b: number, c: number) => [number, number, number, number];
    readonly simulation_boundary: (a: number) => [number, number];
    readonly simulation_cellCount: (a: number) => number;
    readonly simulation_cells: (a: number) => [number, number];
    readonly simulation_clear: (a: number) => void;
    readonly simulation_cycle: (a: number, b: number) => [number, number, number, number];
    readonly simulation_describe: (a: number) => [number, number];
    readonly simulation_edges: (a: number) => [number, number];
    readonly simulation_generation: (a: number) => number;
    readonly simulation_new: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: bigint) => [number, number, number];
    readonly simulation_points: (a: number, b: number, c: number) => [number, number];
    readonly simulation_population: (a: number) => number;
    readonly simulation_step: (a: number, b: number) => [number, number];
    readonly simulation_toggle: (a: number, b: number) => [number, number];
    readonly simulation_valence: (a: number) => number;
    readonly tilingClass: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
