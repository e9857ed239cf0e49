/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_chartview_free: (a: number, b: number) => void;
export const __wbg_geodesicview_free: (a: number, b: number) => void;
export const __wbg_loopview_free: (a: number, b: number) => void;
export const chart_coordinates: (a: number, b: number, c: number) => [number, number, number];
export const chartview_coordinate: (a: number, b: number) => [number, number];
export const chartview_count: (a: number) => number;
export const chartview_name: (a: number, b: number) => [number, number];
export const chartview_x: (a: number) => number;
export const chartview_y: (a: number) => number;
export const geodesic: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const geodesicview_analytic: (a: number) => [number, number];
export const geodesicview_deviation: (a: number) => number;
export const geodesicview_iterations: (a: number) => number;
export const geodesicview_length_analytic: (a: number) => number;
export const geodesicview_length_numeric: (a: number) => number;
export const geodesicview_numeric: (a: number) => [number, number];
export const loop_phase: (a: number, b: number) => [number, number, number];
export const loopview_holonomy_residual: (a: number) => number;
export const loopview_phase: (a: number) => number;
export const loopview_solid_angle: (a: number) => number;
export const plane_to_sphere: (a: number, b: number) => [number, number];
export const sphere_to_plane: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
