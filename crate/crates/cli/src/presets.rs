//! Experiment files shipped with the binary (see `presets/`).

pub const PRESETS: &[(&str, &str)] = &[
    ("ackley10", include_str!("../presets/ackley10.toml")),
    ("ackley50", include_str!("../presets/ackley50.toml")),
    ("ackley100", include_str!("../presets/ackley100.toml")),
    ("beale", include_str!("../presets/beale.toml")),
    ("easom", include_str!("../presets/easom.toml")),
    ("goldstein_price", include_str!("../presets/goldstein_price.toml")),
    ("griewank10", include_str!("../presets/griewank10.toml")),
    ("griewank50", include_str!("../presets/griewank50.toml")),
    ("griewank100", include_str!("../presets/griewank100.toml")),
    ("grover_diffusion", include_str!("../presets/grover_diffusion.toml")),
    ("lj5", include_str!("../presets/lj5.toml")),
    ("lj6", include_str!("../presets/lj6.toml")),
    ("lj7", include_str!("../presets/lj7.toml")),
    ("lj8", include_str!("../presets/lj8.toml")),
    ("lj9", include_str!("../presets/lj9.toml")),
    ("lj10", include_str!("../presets/lj10.toml")),
    ("lj11", include_str!("../presets/lj11.toml")),
    ("lj12", include_str!("../presets/lj12.toml")),
    ("lj13", include_str!("../presets/lj13.toml")),
    ("lj38", include_str!("../presets/lj38.toml")),
    ("rastrigin10", include_str!("../presets/rastrigin10.toml")),
    ("rastrigin50", include_str!("../presets/rastrigin50.toml")),
    ("rastrigin100", include_str!("../presets/rastrigin100.toml")),
    ("rosenbrock10", include_str!("../presets/rosenbrock10.toml")),
    ("rosenbrock50", include_str!("../presets/rosenbrock50.toml")),
    ("rosenbrock100", include_str!("../presets/rosenbrock100.toml")),
    ("shubert", include_str!("../presets/shubert.toml")),
    ("sphere10", include_str!("../presets/sphere10.toml")),
    ("sphere50", include_str!("../presets/sphere50.toml")),
    ("sphere100", include_str!("../presets/sphere100.toml")),
];

pub fn preset(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|(n, _)| *n)
}
