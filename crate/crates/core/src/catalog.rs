//! Built-in factorizations used as fixtures.
//!
//! The 8x8 pair for `x1^2 + ... + x8^2` is stored block by block as data. Both
//! factors are transcribed independently, and loading checks that the second
//! is the transpose of the first and that their product is `f8 * I8`.

use crate::factorization::Factorization;
use crate::poly::{Polynomial, Variables};
use crate::polymat::{BlockQuad, PolyMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub variables: Variables,
    pub target: Polynomial,
    pub factorization: Factorization,
    pub provenance: &'static str,
}

pub const NAMES: [&str; 6] = ["two-squares", "std-2", "std-3", "grouped", "f4", "f8"];

/// `x1^2 + ... + xn^2` in `n` variables.
pub fn sums_of_squares(n: usize) -> Polynomial {
    assert!(n >= 1, "need at least one variable");
    let mut f = Polynomial::zero(n);
    for i in 0..n {
        let x = Polynomial::var(n, i);
        f.add_product(&x, &x);
    }
    f
}

fn grid<const N: usize>(rows: [[&str; N]; N], vars: &Variables) -> PolyMatrix {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    PolyMatrix::parse(&rows, vars).expect("catalog entries parse")
}

fn entry<const N: usize>(
    name: &'static str,
    vars: &[&str],
    target: &str,
    factors: &[[[&str; N]; N]],
    provenance: &'static str,
) -> CatalogEntry {
    let variables = Variables::new(vars.iter().copied()).expect("catalog variables");
    let target = Polynomial::parse(target, &variables).expect("catalog target parses");
    let factors = factors.iter().map(|f| grid(*f, &variables)).collect();
    let factorization = Factorization::verified(target.clone(), factors)
        .unwrap_or_else(|e| panic!("catalog entry {name} does not verify: {e}"));
    CatalogEntry {
        name,
        variables,
        target,
        factorization,
        provenance,
    }
}

/// `[[z, -y], [y, z]] * [[z, y], [-y, z]] = (z^2 + y^2) I2`.
pub fn two_squares() -> CatalogEntry {
    entry(
        "two-squares",
        &["z", "y"],
        "z^2 + y^2",
        &[[["z", "-y"], ["y", "z"]], [["z", "y"], ["-y", "z"]]],
        "2x2 factorization of an irreducible sum of two squares",
    )
}

/// Two-term stage of the standard method for `x^2*y + x^2*z`.
pub fn example_two_term() -> CatalogEntry {
    entry(
        "std-2",
        &["x", "y", "z"],
        "x^2*y + x^2*z",
        &[[["x^2", "-x^2"], ["z", "y"]], [["y", "x^2"], ["-z", "x^2"]]],
        "standard method on (x^2, y), (x^2, z)",
    )
}

/// Standard-method output `N` for `g = x^2*y + x^2*z + y*z^2`.
pub fn example_n() -> CatalogEntry {
    entry(
        "std-3",
        &["x", "y", "z"],
        "x^2*y + x^2*z + y*z^2",
        &[
            [
                ["x^2", "-x^2", "-y", "0"],
                ["z", "y", "0", "-y"],
                ["z^2", "0", "y", "x^2"],
                ["0", "z^2", "-z", "x^2"],
            ],
            [
                ["y", "x^2", "y", "0"],
                ["-z", "x^2", "0", "y"],
                ["-z^2", "0", "x^2", "-x^2"],
                ["0", "-z^2", "z", "y"],
            ],
        ],
        "standard method on (x^2, y), (x^2, z), (y, z^2)",
    )
}

/// 2x2 factorization of `g` from the grouping `x^2 (y + z) + y z^2`.
pub fn example_grouped() -> CatalogEntry {
    entry(
        "grouped",
        &["x", "y", "z"],
        "x^2*y + x^2*z + y*z^2",
        &[
            [["x^2", "-y"], ["z^2", "y + z"]],
            [["y + z", "y"], ["-z^2", "x^2"]],
        ],
        "standard method on (x^2, y + z), (y, z^2) after grouping",
    )
}

const F8_A: [[[&str; 4]; 4]; 4] = [
    [
        ["x1", "-x2", "x3", "x4"],
        ["x2", "x1", "-x4", "x3"],
        ["-x3", "x4", "x1", "x2"],
        ["-x4", "-x3", "-x2", "x1"],
    ],
    [
        ["x5", "x6", "-x7", "-x8"],
        ["-x6", "x5", "-x8", "x7"],
        ["x7", "x8", "x5", "x6"],
        ["x8", "-x7", "-x6", "x5"],
    ],
    [
        ["-x5", "x6", "-x7", "-x8"],
        ["-x6", "-x5", "-x8", "x7"],
        ["x7", "x8", "-x5", "x6"],
        ["x8", "-x7", "-x6", "-x5"],
    ],
    [
        ["x1", "x2", "-x3", "-x4"],
        ["-x2", "x1", "x4", "-x3"],
        ["x3", "-x4", "x1", "-x2"],
        ["x4", "x3", "x2", "x1"],
    ],
];

const F8_B: [[[&str; 4]; 4]; 4] = [
    [
        ["x1", "x2", "-x3", "-x4"],
        ["-x2", "x1", "x4", "-x3"],
        ["x3", "-x4", "x1", "-x2"],
        ["x4", "x3", "x2", "x1"],
    ],
    [
        ["-x5", "-x6", "x7", "x8"],
        ["x6", "-x5", "x8", "-x7"],
        ["-x7", "-x8", "-x5", "-x6"],
        ["-x8", "x7", "x6", "-x5"],
    ],
    [
        ["x5", "-x6", "x7", "x8"],
        ["x6", "x5", "x8", "-x7"],
        ["-x7", "-x8", "x5", "-x6"],
        ["-x8", "x7", "x6", "x5"],
    ],
    [
        ["x1", "-x2", "x3", "x4"],
        ["x2", "x1", "-x4", "x3"],
        ["-x3", "x4", "x1", "x2"],
        ["-x4", "-x3", "-x2", "x1"],
    ],
];

fn quad(blocks: &[[[&str; 4]; 4]; 4], vars: &Variables) -> BlockQuad {
    let [b1, b2, b3, b4] = blocks.map(|b| grid(b, vars));
    BlockQuad::new(b1, b2, b3, b4).expect("4x4 blocks")
}

/// The transcribed quadrant blocks `(A1..A4, B1..B4)` over `x1..x8`.
pub fn f8_blocks() -> (BlockQuad, BlockQuad) {
    let vars = Variables::indexed(8);
    (quad(&F8_A, &vars), quad(&F8_B, &vars))
}

/// The 8x8 pair `(A, A^t)` with `A A^t = (x1^2 + ... + x8^2) I8`.
pub fn f8_minimal() -> Result<Factorization> {
    let (a_blocks, b_blocks) = f8_blocks();
    let a = a_blocks.assemble();
    let b = a.transpose();
    if b != b_blocks.assemble() {
        return Err(Error::Catalog(
            "transcribed B blocks differ from the transpose of A".into(),
        ));
    }
    Factorization::verified(sums_of_squares(8), vec![a, b])
}

/// The 4x4 pair `(A1, A4)` restricted to `x1..x4`; `A4 = A1^t`.
pub fn f4_minimal() -> Result<Factorization> {
    let (a_blocks, _) = f8_blocks();
    let restrict = |m: &PolyMatrix| {
        PolyMatrix::from_fn(4, 4, |i, j| {
            m.get(i, j).with_nvars(4).expect("block uses x1..x4 only")
        })
    };
    let a1 = restrict(a_blocks.block(1));
    let a4 = restrict(a_blocks.block(4));
    if a4 != a1.transpose() {
        return Err(Error::Catalog("A4 is not the transpose of A1".into()));
    }
    Factorization::verified(sums_of_squares(4), vec![a1, a4])
}

fn indexed_entry(
    name: &'static str,
    n: usize,
    fac: Factorization,
    provenance: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        variables: Variables::indexed(n),
        target: fac.target().clone(),
        factorization: fac,
        provenance,
    }
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    Ok(match name {
        "two-squares" => two_squares(),
        "std-2" => example_two_term(),
        "std-3" => example_n(),
        "grouped" => example_grouped(),
        "f4" => indexed_entry(
            "f4",
            4,
            f4_minimal()?,
            "4x4 pair (A1, A1^t) for the sum of four squares",
        ),
        "f8" => indexed_entry(
            "f8",
            8,
            f8_minimal()?,
            "8x8 pair (A, A^t) for the sum of eight squares",
        ),
        other => {
            return Err(Error::Catalog(format!(
                "unknown entry `{other}`; available: {}",
                NAMES.join(", ")
            )))
        }
    })
}

pub fn entries() -> Result<Vec<CatalogEntry>> {
    NAMES.iter().map(|n| lookup(n)).collect()
}
