//! The worked examples used throughout the tests, benches and the CLI corpus.

use crate::extension::VarietyPresentation;
use crate::poly::Polynomial;
use crate::regulous::{Fraction, StratifiedFraction};

fn variety(vars: &[&str], gens: &[&str]) -> VarietyPresentation {
    VarietyPresentation::parse(vars, gens).expect("fixture parses")
}

fn fraction(x: &VarietyPresentation, src: &str) -> Fraction {
    Fraction::parse(x.ring(), src).expect("fixture parses")
}

/// `y^2 = x^3`.
pub fn cusp() -> VarietyPresentation {
    variety(&["x", "y"], &["y^2 - x^3"])
}

/// `y^2 + (x^2 - 1) x^4 = 0`.
pub fn sextic() -> VarietyPresentation {
    variety(&["x", "y"], &["y^2 + (x^2 - 1)*x^4"])
}

/// Three concurrent lines `xy(y - x) = 0`.
pub fn three_lines() -> VarietyPresentation {
    variety(&["x", "y"], &["x*y*(y - x)"])
}

/// `y^2 = x^2 (x + 1)`.
pub fn node() -> VarietyPresentation {
    variety(&["x", "y"], &["y^2 - x^2*(x + 1)"])
}

/// The affine line in the variable `s`.
pub fn line() -> VarietyPresentation {
    variety(&["s"], &[])
}

pub const FOURVAR_RELATIONS: [&str; 3] = [
    "x^2 + z*y*x + t*y^2",
    "z^2 + z^2*t + t^3 + y*t",
    "t^2*x^2 + x^2*y - y^2*z^2",
];

/// Name of the adjoined variable in the four-variable graph system.
pub const FOURVAR_ADJOINED: &str = "X";

pub const FOURVAR_SYSTEM: [&str; 3] = ["y*X - x", "X^2 + z*X + t", "t^2*X^2 + x*X - z^2"];

/// Same graph with the last equation replaced by a linear one in `X`.
pub const FOURVAR_SYSTEM_ALT: [&str; 3] = ["y*X - x", "X^2 + z*X + t", "(x - z*t^2)*X - (t^3 + z^2)"];

/// Surface in `A^4` on which `x/y`, then `z/t`, then `0` is continuous.
pub fn fourvar() -> VarietyPresentation {
    variety(&["x", "y", "z", "t"], &FOURVAR_RELATIONS)
}

pub fn fourvar_function() -> StratifiedFraction {
    let v = fourvar();
    StratifiedFraction::new(vec![fraction(&v, "x / y"), fraction(&v, "z / t")]).unwrap()
}

/// Parses a system over the four-variable ring extended by `X`.
pub fn fourvar_system(eqs: &[&str]) -> Vec<Polynomial> {
    let ring = fourvar().ring().extended([FOURVAR_ADJOINED]).unwrap();
    eqs.iter().map(|e| ring.parse(e).unwrap()).collect()
}

pub fn cusp_yx() -> Fraction {
    fraction(&cusp(), "y / x")
}

pub fn sextic_yx() -> Fraction {
    fraction(&sextic(), "y / x")
}

pub fn sextic_yx2() -> Fraction {
    fraction(&sextic(), "y / x^2")
}

pub fn three_lines_f() -> Fraction {
    fraction(&three_lines(), "2*x*y / (x + y)")
}

pub fn node_yx() -> Fraction {
    fraction(&node(), "y / x")
}

/// `(p, q) = (y, x)` on the cusp: `p^2 = q^3`.
pub fn cusp_swan_pair() -> (Polynomial, Polynomial) {
    let c = cusp();
    (c.parse_poly("y").unwrap(), c.parse_poly("x").unwrap())
}
