/* tslint:disable */
/* eslint-disable */

/**
 * Chamber graph of the movable cone: one node per polarization, one edge
 * per wall.
 */
export function chambers(orbit: string): string;

/**
 * Full classification of an orbit label such as `A5:3,2,1` or `G2:dim8`.
 */
export function classify(orbit: string, seed: number): string;

/**
 * Whether `P(T*(G/P))` is a twistor space for a marked diagram such as
 * `C3:{1}`.
 */
export function twistor(parabolic: string): string;

/**
 * Library and table versions, for the page footer.
 */
export function versions(): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly chambers: (a: number, b: number) => [number, number];
    readonly classify: (a: number, b: number, c: number) => [number, number];
    readonly twistor: (a: number, b: number) => [number, number];
    readonly versions: () => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
