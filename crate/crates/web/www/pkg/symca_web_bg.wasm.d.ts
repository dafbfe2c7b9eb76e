/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_simulation_free: (a: number, b: number) => void;
export const ruleSummary: (a: number, b: number, c: number) => [number, number, number, number];
export const simulation_boundary: (a: number) => [number, number];
export const simulation_cellCount: (a: number) => number;
export const simulation_cells: (a: number) => [number, number];
export const simulation_clear: (a: number) => void;
export const simulation_cycle: (a: number, b: number) => [number, number, number, number];
export const simulation_describe: (a: number) => [number, number];
export const simulation_edges: (a: number) => [number, number];
export const simulation_generation: (a: number) => number;
export const simulation_new: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: bigint) => [number, number, number];
export const simulation_points: (a: number, b: number, c: number) => [number, number];
export const simulation_population: (a: number) => number;
export const simulation_step: (a: number, b: number) => [number, number];
export const simulation_toggle: (a: number, b: number) => [number, number];
export const simulation_valence: (a: number) => number;
export const tilingClass: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
