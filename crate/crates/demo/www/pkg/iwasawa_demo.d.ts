/* tslint:disable */
/* eslint-disable */

/**
 * Result of [`decompose`]; matrices are row-major interleaved `re, im`.
 */
export class Decomposition {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly a: Float64Array;
    /**
     * Distance between the two methods' factors; NaN unless both ran.
     */
    readonly agreement: number;
    readonly b: Float64Array;
    readonly residual: number;
    readonly s: Float64Array;
}

export function admissibility_map(width: number, height: number, r_min: number, r_max: number, n_max: number): Uint8Array;

/**
 * Decomposes the `(p+q)×(p+q)` matrix given as interleaved `re, im` pairs.
 */
export function decompose(p: number, q: number, entries: Float64Array, method: string, tol: number): Decomposition;

export function dressing_orbit(r: number, n_re: number, n_im: number, rotation: number, boost: number, t_max: number, steps: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_decomposition_free: (a: number, b: number) => void;
    readonly admissibility_map: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly decompose: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly decomposition_a: (a: number) => [number, number];
    readonly decomposition_agreement: (a: number) => number;
    readonly decomposition_b: (a: number) => [number, number];
    readonly decomposition_residual: (a: number) => number;
    readonly decomposition_s: (a: number) => [number, number];
    readonly dressing_orbit: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
