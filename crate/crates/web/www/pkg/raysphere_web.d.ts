/* tslint:disable */
/* eslint-disable */

export class ChartView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    coordinate(i: number): number | undefined;
    name(i: number): string | undefined;
    readonly count: number;
    readonly x: number;
    readonly y: number;
}

export class GeodesicView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Exact great-circle arc, same layout.
     */
    readonly analytic: Float64Array;
    readonly deviation: number;
    readonly iterations: number;
    readonly length_analytic: number;
    readonly length_numeric: number;
    /**
     * Solver curve on the sphere as `[n1, n2, n3, n1, ...]`.
     */
    readonly numeric: Float64Array;
}

export class LoopView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly holonomy_residual: number;
    readonly phase: number;
    readonly solid_angle: number;
}

/**
 * Coordinates of the circle point at `angle` in every chart of the
 * `"four-chart"` or `"angular"` atlas that contains it.
 */
export function chart_coordinates(atlas: string, angle: number): ChartView;

/**
 * Minimizes the discrete energy between `(ax, ay)` and `(bx, by)` in the
 * stereographic plane and returns it next to the analytic arc.
 */
export function geodesic(ax: number, ay: number, bx: number, by: number, points: number): GeodesicView;

/**
 * Phase and solid angle of the loop through Bloch directions given as
 * `[x0, y0, z0, x1, y1, z1, ...]` (at least three vertices).
 */
export function loop_phase(directions: Float64Array): LoopView;

/**
 * Sphere point above `(x, y)`.
 */
export function plane_to_sphere(x: number, y: number): Float64Array;

/**
 * Point of the plane that projects to the sphere point `(n1, n2, n3)`.
 */
export function sphere_to_plane(n1: number, n2: number, n3: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_chartview_free: (a: number, b: number) => void;
    readonly __wbg_geodesicview_free: (a: number, b: number) => void;
    readonly __wbg_loopview_free: (a: number, b: number) => void;
    readonly chart_coordinates: (a: number, b: number, c: number) => [number, number, number];
    readonly chartview_coordinate: (a: number, b: number) => [number, number];
    readonly chartview_count: (a: number) => number;
    readonly chartview_name: (a: number, b: number) => [number, number];
    readonly chartview_x: (a: number) => number;
    readonly chartview_y: (a: number) => number;
    readonly geodesic: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly geodesicview_analytic: (a: number) => [number, number];
    readonly geodesicview_deviation: (a: number) => number;
    readonly geodesicview_iterations: (a: number) => number;
    readonly geodesicview_length_analytic: (a: number) => number;
    readonly geodesicview_length_numeric: (a: number) => number;
    readonly geodesicview_numeric: (a: number) => [number, number];
    readonly loop_phase: (a: number, b: number) => [number, number, number];
    readonly loopview_holonomy_residual: (a: number) => number;
    readonly loopview_phase: (a: number) => number;
    readonly loopview_solid_angle: (a: number) => number;
    readonly plane_to_sphere: (a: number, b: number) => [number, number];
    readonly sphere_to_plane: (a: number, b: number, c: number) => [number, number, number, number];
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
