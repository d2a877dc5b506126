/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_decomposition_free: (a: number, b: number) => void;
export const admissibility_map: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const decompose: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const decomposition_a: (a: number) => [number, number];
export const decomposition_agreement: (a: number) => number;
export const decomposition_b: (a: number) => [number, number];
export const decomposition_residual: (a: number) => number;
export const decomposition_s: (a: number) => [number, number];
export const dressing_orbit: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
