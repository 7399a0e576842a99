//! Knots used by the benchmarks, as `(name, braid word, p)`.

pub const KNOTS: &[(&str, &str, u32)] = &[
    ("4_1", "1 -2 1 -2", 5),
    ("8_16", "-1 -1 2 -1 -1 2 -1 2", 7),
    ("9_35", "1 1 2 -1 2 2 3 -2 -2 4 -3 2 4 3", 3),
    ("9_41", "-1 -1 -2 1 3 2 2 -4 -3 2 -3 -4", 7),
    ("10_67", "1 1 1 3 -4 2 3 -4 -2 -2 3 2 -1 2", 3),
];
