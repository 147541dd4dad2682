//! Pseudo-squares, the rotation action, the ten edge classes D0..D9 and the
//! basis-free square invariant of an algebra.
//!
//! A pseudo-square is the presence pattern of the four edges of the diagram
//! attached to a structure matrix: left = `w11`, top = `w12`, bottom = `w21`,
//! right = `w22`.  Rotation by pi swaps left/right and top/bottom; its orbits
//! are the classes D0..D9.  The square of an algebra is the set of classes
//! realized over all natural bases; it is a single class for perfect
//! algebras and a union of at most two classes otherwise.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::StructureMatrix;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Edge presence pattern of the four sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PseudoSquare {
    pub left: bool,
    pub top: bool,
    pub bottom: bool,
    pub right: bool,
}

impl PseudoSquare {
    pub fn new(left: bool, top: bool, bottom: bool, right: bool) -> PseudoSquare {
        PseudoSquare { left, top, bottom, right }
    }

    /// Reads the pattern off a structure matrix.
    pub fn of(m: &StructureMatrix) -> PseudoSquare {
        PseudoSquare {
            left: !m.entry(0, 0).is_zero(),
            top: !m.entry(0, 1).is_zero(),
            bottom: !m.entry(1, 0).is_zero(),
            right: !m.entry(1, 1).is_zero(),
        }
    }

    /// Rotation by pi: swaps left/right and top/bottom.  Involutive.
    pub fn rotate(&self) -> PseudoSquare {
        PseudoSquare { left: self.right, top: self.bottom, bottom: self.top, right: self.left }
    }

    pub fn edge_count(&self) -> usize {
        [self.left, self.top, self.bottom, self.right].iter().filter(|&&b| b).count()
    }

    /// All 16 patterns, in a fixed order.
    pub fn all() -> Vec<PseudoSquare> {
        let mut out = Vec::with_capacity(16);
        for bits in 0u8..16 {
            out.push(PseudoSquare {
                left: bits & 1 != 0,
                top: bits & 2 != 0,
                bottom: bits & 4 != 0,
                right: bits & 8 != 0,
            });
        }
        out
    }
}

/// Orbit of a pseudo-square under rotation by pi.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DClass {
    D0,
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    D8,
    D9,
}

impl DClass {
    pub fn label(&self) -> &'static str {
        match self {
            DClass::D0 => "D0",
            DClass::D1 => "D1",
            DClass::D2 => "D2",
            DClass::D3 => "D3",
            DClass::D4 => "D4",
            DClass::D5 => "D5",
            DClass::D6 => "D6",
            DClass::D7 => "D7",
            DClass::D8 => "D8",
            DClass::D9 => "D9",
        }
    }

    pub fn parse(text: &str) -> Result<DClass> {
        Ok(match text {
            "D0" => DClass::D0,
            "D1" => DClass::D1,
            "D2" => DClass::D2,
            "D3" => DClass::D3,
            "D4" => DClass::D4,
            "D5" => DClass::D5,
            "D6" => DClass::D6,
            "D7" => DClass::D7,
            "D8" => DClass::D8,
            "D9" => DClass::D9,
            other => return Err(Error::Parse(format!("unknown class `{other}`"))),
        })
    }

    /// Member patterns of the orbit, representative (fewest edges) first.
    pub fn members(&self) -> Vec<PseudoSquare> {
        let ps = |l, t, b, r| PseudoSquare::new(l, t, b, r);
        let mut m = match self {
            DClass::D0 => vec![ps(false, false, false, false)],
            DClass::D1 => vec![ps(true, false, false, true)],
            DClass::D2 => vec![ps(false, true, true, false)],
            DClass::D3 => vec![ps(true, true, false, true)],
            DClass::D4 => vec![ps(false, true, true, true)],
            DClass::D5 => vec![ps(true, true, true, true)],
            DClass::D6 => vec![ps(false, false, true, false)],
            DClass::D7 => vec![ps(true, false, false, false)],
            DClass::D8 => vec![ps(false, false, true, true)],
            DClass::D9 => vec![ps(true, false, true, false)],
        };
        let rot = m[0].rotate();
        if rot != m[0] {
            m.push(rot);
        }
        m
    }

    /// Representative pattern: the member with the fewest edges (members tie
    /// only in self-rotated classes).
    pub fn representative(&self) -> PseudoSquare {
        self.members()[0]
    }

    pub fn all() -> [DClass; 10] {
        [
            DClass::D0,
            DClass::D1,
            DClass::D2,
            DClass::D3,
            DClass::D4,
            DClass::D5,
            DClass::D6,
            DClass::D7,
            DClass::D8,
            DClass::D9,
        ]
    }
}

/// The orbit label of a pattern.
pub fn d_class(ps: PseudoSquare) -> DClass {
    for class in DClass::all() {
        if class.members().contains(&ps) {
            return class;
        }
    }
    unreachable!("the ten classes partition the sixteen patterns")
}

/// The square invariant: the set of D-classes realized over all natural
/// bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    classes: BTreeSet<DClass>,
}

impl Square {
    pub fn from_classes(classes: &[DClass]) -> Square {
        Square { classes: classes.iter().copied().collect() }
    }

    pub fn classes(&self) -> Vec<DClass> {
        self.classes.iter().copied().collect()
    }

    pub fn labels(&self) -> Vec<&'static str> {
        self.classes.iter().map(|c| c.label()).collect()
    }

    /// The S-label S0..S8 of the nine possible squares, if this set is one
    /// of them.
    pub fn s_label(&self) -> Option<&'static str> {
        let cs = self.classes();
        match cs.as_slice() {
            [DClass::D0] => Some("S0"),
            [DClass::D1] => Some("S1"),
            [DClass::D2] => Some("S2"),
            [DClass::D3] => Some("S3"),
            [DClass::D4] => Some("S4"),
            [DClass::D5] => Some("S5"),
            [DClass::D6] => Some("S6"),
            [DClass::D7, DClass::D9] => Some("S7"),
            [DClass::D5, DClass::D8] => Some("S8"),
            _ => None,
        }
    }
}

/// Computes the square invariant from the structural case analysis: the
/// D-class of the pattern for perfect algebras, and the case split on
/// `A^3` and `(A^2)^2` for rank-one algebras.
pub fn square_of(m: &StructureMatrix) -> Square {
    if m.is_perfect() {
        return Square::from_classes(&[d_class(PseudoSquare::of(m))]);
    }
    let report = m.power_report();
    match report.a2.dim() {
        0 => Square::from_classes(&[DClass::D0]),
        1 => {
            if report.a3.dim() == 0 {
                Square::from_classes(&[DClass::D6])
            } else if report.a2sq.dim() == 0 {
                Square::from_classes(&[DClass::D5])
            } else if report.ann.dim() > 0 {
                Square::from_classes(&[DClass::D7, DClass::D9])
            } else {
                Square::from_classes(&[DClass::D5, DClass::D8])
            }
        }
        _ => unreachable!("non-perfect algebras have dim A^2 <= 1"),
    }
}

/// Exhaustive oracle over a small prime field: enumerates every invertible
/// matrix whose columns form a natural basis and collects the classes of
/// the resulting patterns.
pub fn brute_force_square(m: &StructureMatrix) -> Result<Square> {
    let p = m
        .field()
        .finite_order()
        .ok_or_else(|| Error::UnsupportedField("brute-force square needs a finite field".to_string()))?;
    if p > 7 {
        return Err(Error::FieldTooLarge { p, limit: 7 });
    }
    let field = m.field();
    let elems = field.elements()?;
    let mut classes = BTreeSet::new();
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    let pm = Matrix::new(
                        field,
                        2,
                        2,
                        vec![a.clone(), b.clone(), c.clone(), d.clone()],
                    );
                    if !m.is_natural_basis(&pm) {
                        continue;
                    }
                    let m2 = m.change_basis(&pm).expect("checked natural");
                    classes.insert(d_class(PseudoSquare::of(&m2)));
                }
            }
        }
    }
    Ok(Square { classes })
}

/// Output format for diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Dot,
}

/// Renders one pattern.
pub fn render_pseudo_square(ps: PseudoSquare, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => {
            let top = if ps.top { "o---o" } else { "o   o" };
            let mid = match (ps.left, ps.right) {
                (true, true) => "|   |",
                (true, false) => "|    ",
                (false, true) => "    |",
                (false, false) => "     ",
            };
            let bottom = if ps.bottom { "o---o" } else { "o   o" };
            format!("{top}\n{mid}\n{bottom}")
        }
        RenderFormat::Dot => {
            let mut s = String::from("graph pseudosquare {\n");
            s.push_str("  \"v1'\"; \"v2'\"; \"v1\"; \"v2\";\n");
            if ps.left {
                s.push_str("  \"v1'\" -- \"v1\";\n");
            }
            if ps.top {
                s.push_str("  \"v1'\" -- \"v2'\";\n");
            }
            if ps.bottom {
                s.push_str("  \"v1\" -- \"v2\";\n");
            }
            if ps.right {
                s.push_str("  \"v2'\" -- \"v2\";\n");
            }
            s.push('}');
            s
        }
    }
}

/// Renders a square: the representative of each class, separated by blank
/// lines, classes in index order.
pub fn render_square(sq: &Square, format: RenderFormat) -> String {
    let parts: Vec<String> = sq
        .classes()
        .iter()
        .map(|c| {
            let body = render_pseudo_square(c.representative(), format);
            match format {
                RenderFormat::Ascii => format!("{}:\n{}", c.label(), body),
                RenderFormat::Dot => body.replacen("pseudosquare", c.label(), 1),
            }
        })
        .collect();
    parts.join("\n\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn pattern_reading_examples() {
        let f = q();
        let m = StructureMatrix::from_i64(&f, [[1, 0], [1, 1]]);
        assert_eq!(PseudoSquare::of(&m), PseudoSquare::new(true, false, true, true));
        let z = StructureMatrix::from_i64(&f, [[0, 0], [0, 0]]);
        assert_eq!(PseudoSquare::of(&z).edge_count(), 0);
        let id = StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]);
        assert_eq!(PseudoSquare::of(&id), PseudoSquare::new(true, false, false, true));
    }

    #[test]
    fn rotation_examples() {
        let left_only = PseudoSquare::new(true, false, false, false);
        assert_eq!(left_only.rotate(), PseudoSquare::new(false, false, false, true));
        let lb = PseudoSquare::new(true, false, true, false);
        assert_eq!(lb.rotate(), PseudoSquare::new(false, true, false, true));
        let full = PseudoSquare::new(true, true, true, true);
        assert_eq!(full.rotate(), full);
        for ps in PseudoSquare::all() {
            assert_eq!(ps.rotate().rotate(), ps);
        }
    }

    #[test]
    fn classes_partition_the_sixteen_patterns() {
        let mut seen = BTreeSet::new();
        let mut sizes = Vec::new();
        for c in DClass::all() {
            let members = c.members();
            sizes.push(members.len());
            for m in members {
                assert!(seen.insert(m), "pattern in two classes");
            }
        }
        assert_eq!(seen.len(), 16);
        let ones = sizes.iter().filter(|&&s| s == 1).count();
        let twos = sizes.iter().filter(|&&s| s == 2).count();
        assert_eq!((ones, twos), (4, 6));
    }

    #[test]
    fn d_class_examples() {
        assert_eq!(d_class(PseudoSquare::new(true, false, false, true)), DClass::D1);
        assert_eq!(d_class(PseudoSquare::new(false, false, true, true)), DClass::D8);
        assert_eq!(d_class(PseudoSquare::new(false, true, true, false)), DClass::D2);
        for ps in PseudoSquare::all() {
            assert_eq!(d_class(ps.rotate()), d_class(ps));
        }
    }

    #[test]
    fn square_of_examples() {
        let f = q();
        let a1 = StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]);
        assert_eq!(square_of(&a1), Square::from_classes(&[DClass::D1]));
        let a7 = StructureMatrix::from_i64(&f, [[1, 0], [0, 0]]);
        assert_eq!(square_of(&a7), Square::from_classes(&[DClass::D7, DClass::D9]));
        assert_eq!(square_of(&a7).s_label(), Some("S7"));
        let a8 = StructureMatrix::from_i64(&f, [[1, 2], [0, 0]]);
        assert_eq!(square_of(&a8), Square::from_classes(&[DClass::D5, DClass::D8]));
        let a0 = StructureMatrix::from_i64(&f, [[0, 0], [0, 0]]);
        assert_eq!(square_of(&a0), Square::from_classes(&[DClass::D0]));
        let a5 = StructureMatrix::from_i64(&f, [[1, -1], [-1, 1]]);
        assert_eq!(square_of(&a5), Square::from_classes(&[DClass::D5]));
        let a6 = StructureMatrix::from_i64(&f, [[0, 1], [0, 0]]);
        assert_eq!(square_of(&a6), Square::from_classes(&[DClass::D6]));
    }

    #[test]
    fn brute_force_matches_on_f3_samples() {
        let f3 = Field::prime(3).unwrap();
        for (mat, expect) in [
            ([[1, 0], [0, 1]], vec![DClass::D1]),
            ([[1, 1], [0, 0]], vec![DClass::D5, DClass::D8]),
            ([[0, 0], [0, 0]], vec![DClass::D0]),
            ([[1, 0], [0, 0]], vec![DClass::D7, DClass::D9]),
        ] {
            let m = StructureMatrix::from_i64(&f3, mat);
            let bf = brute_force_square(&m).unwrap();
            assert_eq!(bf, Square::from_classes(&expect));
            assert_eq!(square_of(&m), bf);
        }
    }

    #[test]
    fn render_shapes() {
        let d1 = render_pseudo_square(DClass::D1.representative(), RenderFormat::Ascii);
        assert_eq!(d1, "o   o\n|   |\no   o");
        let dot0 = render_pseudo_square(DClass::D0.representative(), RenderFormat::Dot);
        assert!(!dot0.contains("--"));
        let s7 = Square::from_classes(&[DClass::D7, DClass::D9]);
        let text = render_square(&s7, RenderFormat::Ascii);
        assert_eq!(text.split("\n\n").count(), 2);
    }
}
