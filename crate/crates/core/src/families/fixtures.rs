//! Fixed example graphs, frozen as edge lists.

use std::fmt;
use std::str::FromStr;

use super::FamilyError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Claw-free cubic graph on 12 vertices with 2OID number 2n/3.
    H1,
    /// Claw-free cubic graph on 10 vertices with 2OID number 3n/5.
    H2,
    /// A member of Ψ on 10 vertices.
    PsiFig1,
    /// A member of Ω with (a, b, p, r, k_3, k_4) = (2, 2, 4, 3, 0, 3).
    OmegaFig3,
}

impl Fixture {
    pub const ALL: [Fixture; 4] = [Fixture::H1, Fixture::H2, Fixture::PsiFig1, Fixture::OmegaFig3];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::H1 => "H1",
            Fixture::H2 => "H2",
            Fixture::PsiFig1 => "PSI_FIG1",
            Fixture::OmegaFig3 => "OMEGA_FIG3",
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            Fixture::H1 => (12, &H1),
            Fixture::H2 => (10, &H2),
            Fixture::PsiFig1 => (10, &PSI_FIG1),
            Fixture::OmegaFig3 => (15, &OMEGA_FIG3),
        };
        Graph::from_edge_list(n, edges).expect("fixture edge lists are valid")
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownFixture(s.to_string()))
    }
}

pub fn fixture(name: &str) -> Result<Graph, FamilyError> {
    Ok(name.parse::<Fixture>()?.graph())
}

// x1..x4 = 0..3, y1..y4 = 4..7, z1..z4 = 8..11. Each block is K4 minus the
// edge between its second and fourth vertex.
#[rustfmt::skip]
const H1: [(usize, usize); 18] = [
    (0, 1), (1, 2), (2, 3), (3, 0), (0, 2),
    (4, 5), (5, 6), (6, 7), (7, 4), (4, 6),
    (8, 9), (9, 10), (10, 11), (11, 8), (8, 10),
    (3, 11), (9, 7), (1, 5),
];

// u1..u6 = 0..5, v1..v4 = 6..9.
#[rustfmt::skip]
const H2: [(usize, usize); 15] = [
    (6, 0), (0, 1), (1, 6), (6, 3), (3, 9),
    (9, 5), (5, 8), (8, 4), (4, 7), (7, 1),
    (0, 7), (8, 2), (2, 9), (5, 4), (2, 3),
];

// x = 0, y1..y3 = 1..3, x1..x6 = 4..9.
#[rustfmt::skip]
const PSI_FIG1: [(usize, usize); 18] = [
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (4, 1), (4, 2), (5, 1), (5, 2),
    (6, 1), (6, 3), (7, 1), (7, 3),
    (8, 2), (8, 3), (9, 2), (9, 3),
];

// v1 = 0, v1' = 1, v2 = 2, v2' = 3, v3 = 4, v3' = 5, v4 = 6, v4' = 7,
// u1..u4 = 8..11, w1..w3 = 12..14 (the extra leaves of v4).
#[rustfmt::skip]
const OMEGA_FIG3: [(usize, usize); 19] = [
    (0, 1), (2, 3), (4, 5), (6, 7),
    (8, 0), (8, 2), (8, 3),
    (9, 0), (9, 1), (9, 6),
    (10, 1), (10, 4), (10, 6),
    (11, 2), (11, 3), (11, 1),
    (12, 6), (13, 6), (14, 6),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{in_omega, in_psi};
    use crate::solvers::{value, ParamKind};

    #[test]
    fn cubic_fixtures() {
        for (f, n, expected) in [(Fixture::H1, 12, 8), (Fixture::H2, 10, 6)] {
            let g = f.graph();
            assert_eq!(g.order(), n);
            assert!(g.is_regular(3), "{f}");
            assert!(g.is_claw_free(), "{f}");
            assert!(g.is_connected(), "{f}");
            assert_eq!(value(&g, ParamKind::TwoOid), Some(expected), "{f}");
        }
    }

    #[test]
    fn psi_figure() {
        let g = Fixture::PsiFig1.graph();
        assert!(in_psi(&g));
        assert_eq!(value(&g, ParamKind::TwoOid), Some(3));
        assert_eq!(value(&g.complement(), ParamKind::TwoOid), Some(6));
    }

    #[test]
    fn omega_figure() {
        let g = Fixture::OmegaFig3.graph();
        let p = g.degree_profile();
        assert_eq!(
            (g.order(), g.size(), p.leaves.len(), p.supports.len(), p.delta_star),
            (15, 19, 5, 2, 3)
        );
        assert!(in_omega(&g).unwrap());
        assert_eq!(value(&g, ParamKind::Doid), Some(11));
    }

    #[test]
    fn names() {
        assert_eq!(fixture("psi_fig1").unwrap(), Fixture::PsiFig1.graph());
        assert!(matches!(fixture("H3"), Err(FamilyError::UnknownFixture(_))));
    }
}
