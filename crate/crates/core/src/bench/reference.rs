//! Printed reference values for the benchmark tables.
//!
//! Cells that carry text instead of a number are stored as NaN.

#![allow(clippy::excessive_precision)]

/// Case 1: t, x, D-J & He k=1, then He/D-J pairs for k=2..5.
pub const CASE1_ERRORS: [[f64; 11]; 25] = [
    [0.1, 0.1, 1.33e-07, 5.41e-10, 3.81e-10, 2.20e-12, 8.47e-13, 4.89e-13, 1.54e-15, 4.97e-13, 2.37e-18],
    [0.1, 0.3, 4.00e-07, 1.62e-09, 1.14e-09, 6.59e-12, 2.54e-12, 1.47e-12, 4.62e-15, 1.49e-12, 7.11e-18],
    [0.1, 0.5, 6.67e-07, 2.71e-09, 1.91e-09, 1.10e-11, 4.24e-12, 2.44e-12, 7.70e-15, 2.48e-12, 1.18e-17],
    [0.1, 0.7, 9.34e-07, 3.79e-09, 2.67e-09, 1.54e-11, 5.93e-12, 3.42e-12, 1.08e-14, 3.48e-12, 1.66e-17],
    [0.1, 0.9, 1.20e-06, 4.87e-09, 3.43e-09, 1.98e-11, 7.62e-12, 4.40e-12, 1.39e-14, 4.47e-12, 2.13e-17],
    [0.3, 0.1, 3.27e-05, 1.21e-06, 8.40e-07, 4.45e-08, 1.68e-08, 8.76e-09, 2.74e-10, 1.03e-08, 3.79e-12],
    [0.3, 0.3, 9.82e-05, 3.62e-06, 2.52e-06, 1.34e-07, 5.03e-08, 2.63e-08, 8.23e-10, 3.09e-08, 1.14e-11],
    [0.3, 0.5, 1.64e-04, 6.03e-06, 4.20e-06, 2.23e-07, 8.39e-08, 4.38e-08, 1.37e-09, 5.14e-08, 1.90e-11],
    [0.3, 0.7, 2.29e-04, 8.45e-06, 5.88e-06, 3.12e-07, 1.17e-07, 6.13e-08, 1.92e-09, 7.20e-08, 2.66e-11],
    [0.3, 0.9, 2.95e-04, 1.09e-05, 7.56e-06, 4.01e-07, 1.51e-07, 7.88e-08, 2.47e-09, 9.26e-08, 3.41e-11],
    [0.5, 0.1, 4.29e-04, 4.48e-05, 3.04e-05, 4.69e-06, 1.68e-06, 6.72e-07, 7.63e-08, 1.16e-06, 2.93e-09],
    [0.5, 0.3, 1.29e-03, 1.34e-04, 9.11e-05, 1.41e-05, 5.05e-06, 2.01e-06, 2.29e-07, 3.48e-06, 8.78e-09],
    [0.5, 0.5, 2.15e-03, 2.24e-04, 1.52e-04, 2.35e-05, 8.41e-06, 3.36e-06, 3.81e-07, 5.79e-06, 1.46e-08],
    [0.5, 0.7, 3.00e-03, 3.14e-04, 2.13e-04, 3.28e-05, 1.18e-05, 4.70e-06, 5.34e-07, 8.11e-06, 2.05e-08],
    [0.5, 0.9, 3.86e-03, 4.03e-04, 2.73e-04, 4.22e-05, 1.51e-05, 6.04e-06, 6.86e-07, 1.04e-05, 2.64e-08],
    [0.7, 0.1, 2.37e-03, 5.00e-04, 3.24e-04, 1.06e-04, 3.52e-05, 6.23e-06, 3.12e-06, 3.06e-05, 2.35e-07],
    [0.7, 0.3, 7.11e-03, 1.50e-03, 9.73e-04, 3.17e-04, 1.06e-04, 1.87e-05, 9.37e-06, 9.17e-05, 7.05e-07],
    [0.7, 0.5, 1.19e-02, 2.50e-03, 1.62e-03, 5.29e-04, 1.76e-04, 3.12e-05, 1.56e-05, 1.53e-04, 1.17e-06],
    [0.7, 0.7, 1.66e-02, 3.50e-03, 2.27e-03, 7.41e-04, 2.47e-04, 4.36e-05, 2.19e-05, 2.14e-04, 1.64e-06],
    [0.7, 0.9, 2.13e-02, 4.50e-03, 2.92e-03, 9.52e-04, 3.17e-04, 5.61e-05, 2.81e-05, 2.75e-04, 2.11e-06],
    [0.9, 0.1, 8.63e-03, 3.13e-03, 1.90e-03, 1.14e-03, 3.43e-04, 6.95e-05, 5.02e-05, 4.37e-04, 6.23e-06],
    [0.9, 0.3, 2.59e-02, 9.39e-03, 5.70e-03, 3.41e-03, 1.03e-03, 2.08e-04, 1.51e-04, 1.31e-03, 1.87e-05],
    [0.9, 0.5, 4.32e-02, 1.57e-02, 9.50e-03, 5.69e-03, 1.72e-03, 3.47e-04, 2.51e-04, 2.19e-03, 3.12e-05],
    [0.9, 0.7, 6.04e-02, 2.19e-02, 1.33e-02, 7.97e-03, 2.40e-03, 4.86e-04, 3.51e-04, 3.06e-03, 4.36e-05],
    [0.9, 0.9, 7.77e-02, 2.82e-02, 1.71e-02, 1.02e-02, 3.09e-03, 6.25e-04, 4.52e-04, 3.94e-03, 5.61e-05],
];

/// Case 2: t, x, then the shared He/D-J error for k=1..6.
pub const CASE2_ERRORS: [[f64; 8]; 25] = [
    [0.1, 0.1, 4.68e-03, 1.55e-04, 3.85e-06, 7.67e-08, 1.27e-09, 1.82e-11],
    [0.1, 0.3, 3.83e-03, 1.27e-04, 3.15e-06, 6.28e-08, 1.04e-09, 1.49e-11],
    [0.1, 0.5, 3.14e-03, 1.04e-04, 2.58e-06, 5.14e-08, 8.55e-10, 1.22e-11],
    [0.1, 0.7, 2.57e-03, 8.49e-05, 2.11e-06, 4.21e-08, 7.00e-10, 9.98e-12],
    [0.1, 0.9, 2.10e-03, 6.95e-05, 1.73e-06, 3.45e-08, 5.73e-10, 8.17e-12],
    [0.3, 0.1, 4.51e-02, 4.40e-03, 3.25e-04, 1.93e-05, 9.57e-07, 4.08e-08],
    [0.3, 0.3, 3.69e-02, 3.60e-03, 2.66e-04, 1.58e-05, 7.83e-07, 3.34e-08],
    [0.3, 0.5, 3.02e-02, 2.95e-03, 2.18e-04, 1.29e-05, 6.41e-07, 2.73e-08],
    [0.3, 0.7, 2.48e-02, 2.41e-03, 1.78e-04, 1.06e-05, 5.25e-07, 2.24e-08],
    [0.3, 0.9, 2.03e-02, 1.98e-03, 1.46e-04, 8.66e-06, 4.30e-07, 1.83e-08],
    [0.5, 0.1, 1.35e-01, 2.15e-02, 2.61e-03, 2.57e-04, 2.11e-05, 1.50e-06],
    [0.5, 0.3, 1.10e-01, 1.76e-02, 2.14e-03, 2.10e-04, 1.73e-05, 1.22e-06],
    [0.5, 0.5, 9.02e-02, 1.44e-02, 1.75e-03, 1.72e-04, 1.42e-05, 1.00e-06],
    [0.5, 0.7, 7.39e-02, 1.18e-02, 1.43e-03, 1.41e-04, 1.16e-05, 8.21e-07],
    [0.5, 0.9, 6.05e-02, 9.64e-03, 1.17e-03, 1.15e-04, 9.50e-06, 6.72e-07],
    [0.7, 0.1, 2.84e-01, 6.22e-02, 1.05e-02, 1.43e-03, 1.64e-04, 1.62e-05],
    [0.7, 0.3, 2.32e-01, 5.09e-02, 8.58e-03, 1.17e-03, 1.34e-04, 1.33e-05],
    [0.7, 0.5, 1.90e-01, 4.17e-02, 7.03e-03, 9.59e-04, 1.10e-04, 1.09e-05],
    [0.7, 0.7, 1.56e-01, 3.41e-02, 5.75e-03, 7.86e-04, 9.00e-05, 8.88e-06],
    [0.7, 0.9, 1.28e-01, 2.80e-02, 4.71e-03, 6.43e-04, 7.37e-05, 7.27e-06],
    [0.9, 0.1, 5.06e-01, 1.40e-01, 3.00e-02, 5.22e-03, 7.64e-04, 9.66e-05],
    [0.9, 0.3, 4.15e-01, 1.15e-01, 2.45e-02, 4.27e-03, 6.26e-04, 7.91e-05],
    [0.9, 0.5, 3.39e-01, 9.38e-02, 2.01e-02, 3.50e-03, 5.12e-04, 6.47e-05],
    [0.9, 0.7, 2.78e-01, 7.68e-02, 1.64e-02, 2.86e-03, 4.20e-04, 5.30e-05],
    [0.9, 0.9, 2.28e-01, 6.29e-02, 1.35e-02, 2.34e-03, 3.43e-04, 4.34e-05],
];

/// Case 3: t, x, D-J & He k=1, then He/D-J pairs for k=2..5.
pub const CASE3_ERRORS: [[f64; 11]; 15] = [
    [0.01, 0.1, 1.68e-04, 2.13e-06, 6.76e-07, 6.98e-08, 1.21e-08, 3.88e-10, 1.05e-10, 2.45e-11, 3.97e-13],
    [0.01, 0.4, 1.91e-04, 4.18e-07, 1.44e-06, 6.87e-08, 1.08e-08, 4.40e-10, 1.85e-10, 1.93e-11, 3.29e-13],
    [0.01, 0.7, 1.86e-04, 1.01e-06, 2.09e-06, 4.74e-08, 1.35e-08, 8.99e-10, 1.90e-10, 5.61e-12, 1.00e-12],
    [0.03, 0.1, 1.47e-03, 6.12e-05, 1.45e-05, 5.58e-06, 9.78e-07, 1.06e-07, 2.18e-08, 1.77e-08, 3.34e-10],
    [0.03, 0.4, 1.71e-03, 1.51e-05, 3.51e-05, 5.63e-06, 8.11e-07, 9.72e-08, 4.37e-08, 1.44e-08, 4.12e-10],
    [0.03, 0.7, 1.69e-03, 2.45e-05, 5.37e-05, 3.98e-06, 9.87e-07, 2.15e-07, 4.53e-08, 4.59e-09, 5.96e-10],
    [0.05, 0.1, 3.96e-03, 3.00e-04, 5.08e-05, 4.24e-05, 7.58e-06, 1.51e-06, 2.27e-07, 3.77e-07, 7.63e-09],
    [0.05, 0.4, 4.71e-03, 8.75e-05, 1.45e-04, 4.38e-05, 5.83e-06, 1.12e-06, 5.44e-07, 3.17e-07, 1.25e-08],
    [0.05, 0.7, 4.72e-03, 1.00e-04, 2.35e-04, 3.18e-05, 6.79e-06, 2.72e-06, 5.76e-07, 1.09e-07, 9.67e-09],
    [0.07, 0.1, 7.48e-03, 8.67e-04, 9.61e-05, 1.60e-04, 2.96e-05, 8.92e-06, 9.16e-07, 2.80e-06, 5.69e-08],
    [0.07, 0.4, 9.11e-03, 2.89e-04, 3.49e-04, 1.69e-04, 2.11e-05, 5.29e-06, 2.82e-06, 2.43e-06, 1.22e-07],
    [0.07, 0.7, 9.29e-03, 2.36e-04, 6.07e-04, 1.26e-04, 2.31e-05, 1.43e-05, 3.07e-06, 9.01e-07, 4.75e-08],
    [0.09, 0.1, 1.19e-02, 1.93e-03, 1.17e-04, 4.27e-04, 8.27e-05, 3.40e-05, 2.07e-06, 1.25e-05, 2.34e-07],
    [0.09, 0.4, 1.48e-02, 7.19e-04, 6.37e-04, 4.64e-04, 5.48e-05, 1.59e-05, 9.50e-06, 1.12e-05, 6.73e-07],
    [0.09, 0.7, 1.54e-02, 4.14e-04, 1.20e-03, 3.54e-04, 5.52e-05, 4.90e-05, 1.07e-05, 4.43e-06, 9.12e-08],
];

/// Case 3: t, x, D-J, He, ADM, VIM, exact.
pub const CASE3_SOLUTIONS: [[f64; 7]; 12] = [
    [0.1, 0.25, 0.31603224, 0.31602565, 0.317948, 0.31594, 0.31604242],
    [0.1, 0.5, 0.24998226, 0.25004861, 0.2505, 0.249926, 0.25],
    [0.1, 0.75, 0.19167177, 0.19177604, 0.190979, 0.191606, 0.19168942],
    [0.1, 1.0, 0.14252275, 0.1426279, 0.140979, 0.142411, 0.14253696],
    [0.2, 0.25, 0.46124955, 0.46002885, 0.481199, 0.45932, 0.46128371],
    [0.2, 0.5, 0.38698507, 0.38832484, 0.396941, 0.38645, 0.38745562],
    [0.2, 0.75, 0.31546712, 0.31840716, 0.315266, 0.315478, 0.31604242],
    [0.2, 1.0, 0.24956305, 0.25285285, 0.241175, 0.249092, 0.25],
    [0.3, 0.25, 0.60693584, 0.59045763, 0.68144, 0.591179, 0.60419507],
    [0.3, 0.5, 0.53236177, 0.53588028, 0.527635, 0.527635, 0.53444665],
    [0.3, 0.75, 0.45688928, 0.47510866, 0.475833, 0.459719, 0.46128371],
    [0.3, 1.0, 0.38369103, 0.40723342, 0.372917, 0.387025, 0.38745562],
];

/// Case 3 at t = 0.001: x, NIM, OAFM, He, D-J, exact, AE NIM, AE OAFM, AE He, AE D-J.
pub const CASE3_EARLY: [[f64; 10]; 6] = [
    [0.5, 0.142537, 0.142537, 0.143426115278, 0.14342611527, 0.143426115271, 1.46e-03, 4.80e-04, 6.27e-12, 1.17e-12],
    [0.6, 0.125559, 0.125559, 0.126372035454, 0.126372035447, 0.126372035448, 1.31e-03, 3.89e-04, 5.53e-12, 1.27e-12],
    [0.7, 0.110099, 0.110099, 0.110836873586, 0.11083687358, 0.110836873582, 1.17e-03, 7.38e-04, 4.66e-12, 1.42e-12],
    [0.8, 0.096116, 0.096116, 0.096780772254, 0.096780772249, 0.09678077225, 1.04e-03, 2.68e-04, 3.74e-12, 1.59e-12],
    [0.9, 0.08355, 0.08355, 0.084145873623, 0.084145873618, 0.08414587362, 9.20e-04, 2.32e-04, 2.80e-12, 1.77e-12],
    [1.0, 0.072329, 0.072329, 0.072859838185, 0.072859838181, 0.072859838183, 8.06e-04, 2.08e-04, 1.90e-12, 1.96e-12],
];

/// Case 4: t, x, D-J & He k=1, then He/D-J pairs for k=2..5.
pub const CASE4_ERRORS: [[f64; 11]; 25] = [
    [0.1, 0.1, 2.46e-06, 2.40e-08, 9.09e-09, 1.95e-10, 1.79e-11, 1.56e-12, 2.17e-14, 1.19e-14, 1.80e-17],
    [0.1, 0.3, 2.22e-05, 2.16e-07, 8.18e-08, 1.76e-09, 1.61e-10, 1.40e-11, 1.96e-13, 1.07e-13, 1.62e-16],
    [0.1, 0.5, 6.16e-05, 5.99e-07, 2.27e-07, 4.88e-09, 4.46e-10, 3.89e-11, 5.44e-13, 2.97e-13, 4.51e-16],
    [0.1, 0.7, 1.21e-04, 1.17e-06, 4.46e-07, 9.56e-09, 8.75e-10, 7.63e-11, 1.07e-12, 5.83e-13, 8.83e-16],
    [0.1, 0.9, 1.99e-04, 1.94e-06, 7.37e-07, 1.58e-08, 1.45e-09, 1.26e-10, 1.76e-12, 9.64e-13, 1.46e-15],
    [0.3, 0.1, 1.35e-04, 1.13e-05, 3.95e-06, 7.37e-07, 6.03e-08, 4.86e-08, 5.64e-10, 3.02e-09, 3.57e-12],
    [0.3, 0.3, 1.22e-03, 1.02e-04, 3.56e-05, 6.63e-06, 5.42e-07, 4.37e-07, 5.07e-09, 2.72e-08, 3.21e-11],
    [0.3, 0.5, 3.38e-03, 2.82e-04, 9.88e-05, 1.84e-05, 1.51e-06, 1.21e-06, 1.41e-08, 7.55e-08, 8.93e-11],
    [0.3, 0.7, 6.62e-03, 5.54e-04, 1.94e-04, 3.61e-05, 2.95e-06, 2.38e-06, 2.76e-08, 1.48e-07, 1.75e-10],
    [0.3, 0.9, 1.09e-02, 9.15e-04, 3.20e-04, 5.97e-05, 4.88e-06, 3.93e-06, 4.57e-08, 2.45e-07, 2.89e-10],
    [0.5, 0.1, 6.94e-04, 1.59e-04, 5.16e-05, 2.48e-05, 1.96e-06, 4.20e-06, 4.47e-08, 6.46e-07, 6.84e-10],
    [0.5, 0.3, 6.25e-03, 1.43e-03, 4.64e-04, 2.23e-04, 1.76e-05, 3.78e-05, 4.02e-07, 5.81e-06, 6.16e-09],
    [0.5, 0.5, 1.74e-02, 3.97e-03, 1.29e-03, 6.20e-04, 4.90e-05, 1.05e-04, 1.12e-06, 1.61e-05, 1.71e-08],
    [0.5, 0.7, 3.40e-02, 7.78e-03, 2.53e-03, 1.22e-03, 9.60e-05, 2.06e-04, 2.19e-06, 3.16e-05, 3.35e-08],
    [0.5, 0.9, 5.62e-02, 1.29e-02, 4.18e-03, 2.01e-03, 1.59e-04, 3.40e-04, 3.62e-06, 5.23e-05, 5.54e-08],
    [0.7, 0.1, 1.68e-03, 7.95e-04, 2.34e-04, 1.98e-04, 1.63e-05, 6.26e-05, 6.59e-07, 1.63e-05, 1.76e-08],
    [0.7, 0.3, 1.51e-02, 7.15e-03, 2.10e-03, 1.78e-03, 1.46e-04, 5.64e-04, 5.93e-06, 1.47e-04, 1.58e-07],
    [0.7, 0.5, 4.20e-02, 1.99e-02, 5.85e-03, 4.95e-03, 4.07e-04, 1.57e-03, 1.65e-05, 4.07e-04, 4.40e-07],
    [0.7, 0.7, 8.22e-02, 3.89e-02, 1.15e-02, 9.70e-03, 7.97e-04, 3.07e-03, 3.23e-05, 7.98e-04, 8.62e-07],
    [0.7, 0.9, 1.36e-01, 6.44e-02, 1.89e-02, 1.60e-02, 1.32e-03, 5.07e-03, 5.34e-05, 1.32e-03, 1.42e-06],
    [0.9, 0.1, 2.51e-03, 2.46e-03, 6.18e-04, 7.21e-04, 6.89e-05, 4.02e-04, 4.32e-06, 1.36e-04, 1.73e-07],
    [0.9, 0.3, 2.26e-02, 2.22e-02, 5.56e-03, 6.49e-03, 6.20e-04, 3.62e-03, 3.88e-05, 1.22e-03, 1.56e-06],
    [0.9, 0.5, 6.27e-02, 6.16e-02, 1.54e-02, 1.80e-02, 1.72e-03, 1.00e-02, 1.08e-04, 3.40e-03, 4.33e-06],
    [0.9, 0.7, 1.23e-01, 1.21e-01, 3.03e-02, 3.53e-02, 3.38e-03, 1.97e-02, 2.11e-04, 6.65e-03, 8.49e-06],
    [0.9, 0.9, 2.03e-01, 2.00e-01, 5.00e-02, 5.84e-02, 5.58e-03, 3.26e-02, 3.50e-04, 1.10e-02, 1.40e-05],
];

/// Case 4: t, x, D-J, He, GDTM, ADM, VIM, exact.
pub const CASE4_SOLUTIONS: [[f64; 8]; 12] = [
    [0.2, 0.25, 0.043402778, 0.043402778, 0.043403, 0.043339, 0.043403, 0.043402778],
    [0.2, 0.5, 0.173611111, 0.17361111, 0.173611, 0.17358, 0.173611, 0.173611111],
    [0.2, 0.75, 0.390625, 0.390624998, 0.390625, 0.390556, 0.390625, 0.390625],
    [0.2, 1.0, 0.694444444, 0.694444441, 0.694444, 0.694321, 0.694444, 0.694444444],
    [0.4, 0.25, 0.031887755, 0.031887347, 0.031888, 0.031567, 0.031888, 0.031887755],
    [0.4, 0.5, 0.127551019, 0.127549388, 0.127551, 0.126268, 0.127551, 0.12755102],
    [0.4, 0.75, 0.286989792, 0.286986122, 0.28699, 0.284103, 0.28699, 0.286989796],
    [0.4, 1.0, 0.510204074, 0.51019755, 0.510204, 0.505072, 0.510204, 0.510204082],
    [0.6, 0.25, 0.024414037, 0.024389883, 0.024433, 0.022005, 0.024414, 0.024414062],
    [0.6, 0.5, 0.097656148, 0.097559534, 0.09773, 0.088018, 0.097656, 0.09765625],
    [0.6, 0.75, 0.219726333, 0.219508951, 0.219893, 0.19804, 0.219727, 0.219726562],
    [0.6, 1.0, 0.390624593, 0.390238135, 0.390921, 0.352071, 0.390625, 0.390625],
];

/// Case 5 as printed: t, x, D-J & He k=1, He/D-J pairs for k=2..4, NTIM, q-HAM.
pub const CASE5_ERRORS: [[f64; 11]; 12] = [
    [0.1, 0.1, 1.25e-11, 8.31e-18, 4.19e-18, 2.08e-20, 4.27e-19, 1.44e-24, f64::NAN, 4.99e-9, 8.72e-18],
    [0.1, 0.2, 5.00e-11, 6.63e-17, 3.37e-17, 3.33e-19, 1.04e-18, 1.15e-23, f64::NAN, 9.99e-9, 6.65e-17],
    [0.1, 0.3, 1.12e-10, 2.23e-16, 1.14e-16, 1.69e-18, 9.08e-18, 3.79e-23, f64::NAN, 1.12e-8, 2.23e-16],
    [0.1, 0.4, 2.00e-10, 5.28e-16, 2.72e-16, 5.33e-18, 3.15e-17, 8.54e-23, f64::NAN, 1.49e-8, 5.28e-16],
    [0.3, 0.1, 1.25e-11, 2.50e-17, 1.25e-17, 2.08e-20, 1.61e-18, 1.53e-24, f64::NAN, 1.99e-8, 2.65e-17],
    [0.3, 0.2, 5.00e-11, 2.00e-16, 1.00e-16, 3.33e-19, 1.34e-18, 1.14e-23, f64::NAN, 1.49e-8, 2.01e-16],
    [0.3, 0.3, 1.12e-10, 6.73e-16, 3.38e-16, 1.68e-18, 5.48e-18, 3.28e-23, f64::NAN, 2.99e-8, 6.74e-16],
    [0.3, 0.4, 4.99e-8, 1.59e-15, 8.03e-16, 5.32e-18, 2.66e-17, 5.75e-23, f64::NAN, 5.99e-8, 1.59e-15],
    [0.5, 0.1, 1.25e-11, 4.16e-17, 2.07e-17, 2.07e-20, 2.78e-18, 1.63e-24, f64::NAN, 2.49e-8, 3.99e-17],
    [0.5, 0.2, 4.99e-11, 3.32e-16, 1.66e-16, 3.32e-19, 3.70e-18, 1.13e-23, f64::NAN, 4.99e-8, 3.31e-16],
    [0.5, 0.3, 1.12e-10, 1.12e-15, 5.61e-16, 1.68e-18, 1.86e-18, 2.77e-23, f64::NAN, 7.48e-8, 1.11e-15],
    [0.5, 0.4, 2.00e-10, 2.66e-15, 1.33e-15, 5.31e-18, 2.16e-17, 2.95e-23, f64::NAN, 9.98e-8, 2.66e-15],
];

/// Cost table: case, memory He (MB), memory D-J (MB), time He (s), time D-J (s).
pub const COSTS: [[f64; 5]; 5] = [
    [1.0, 58.19, 70.18, 3.03, 3.18],
    [2.0, 38.0, 38.0, 2.09, 2.09],
    [3.0, 22.18, 82.61, 1.03, 30.06],
    [4.0, 40.18, 40.18, 2.28, 2.59],
    [5.0, 72.18, 597.21, 2.64, 8735.39],
];
