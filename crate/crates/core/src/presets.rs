//! Built-in example curves and the four surface families built on their
//! natural lifts.

use crate::error::Result;
use crate::frenet::CurveSpec;
use crate::lift::Orientation;
use crate::surface::{MarchingScale, SurfaceFamily};

/// The unit-speed hyperbola `(sinh s, 0, cosh s)`: kappa = 1, tau = 0.
pub const HYPERBOLA: [&str; 3] = ["sinh(s)", "0", "cosh(s)"];

/// The timelike helix `(5s/3, 4/9 cos 3s, 4/9 sin 3s)`: kappa = 4, tau = 5.
pub const HELIX: [&str; 3] = ["(5/3)*s", "(4/9)*cos(3*s)", "(4/9)*sin(3*s)"];

/// Shown in the report of example 1.
pub const P1_ERRATUM: &str = "the commonly printed closed form of this surface carries an extra \
     (0, sinh t, 0) term; with B~ = (0, 1, 0) and w = 0 nothing moves along x2, so the mesh is \
     built from the marching functions u = t, v = sinh t, w = 0, which satisfy the asymptotic \
     conditions";

/// Shown in the reports of examples 3 and 4.
pub const HELIX_BINORMAL_NOTE: &str = "the lift binormal of the helix is timelike; the canonical \
     rule T~ x N~ = B~ gives B~ = (1, 0, 0), while the published frame and surface use \
     B~ = (-1, 0, 0), which is what orientation = paper-signs produces";

#[derive(Debug, Clone, PartialEq)]
pub struct Example {
    pub id: u8,
    pub name: &'static str,
    pub curve: [&'static str; 3],
    pub s_range: (f64, f64),
    pub marching: [&'static str; 3],
    pub t0: f64,
    pub t_range: (f64, f64),
    pub orientation: Orientation,
    pub notes: &'static [&'static str],
}

impl Example {
    pub fn curve_spec(&self) -> Result<CurveSpec> {
        CurveSpec::parse(self.curve, self.s_range.0, self.s_range.1)
    }

    pub fn surface(&self) -> Result<SurfaceFamily> {
        let curve = self.curve_spec()?;
        let marching =
            MarchingScale::parse(self.marching, self.t0, self.t_range.0, self.t_range.1)?;
        Ok(SurfaceFamily::new(curve, marching, self.orientation))
    }
}

/// The four reference surfaces. The domains of 2 and 4 are closed
/// intervals just inside the open ones the families are stated on
/// (0 < s and 1 < s), where dv/dt vanishes at the excluded endpoint.
pub const EXAMPLES: [Example; 4] = [
    Example {
        id: 1,
        name: "hyperbola-tangent-normal",
        curve: HYPERBOLA,
        s_range: (-1.0, 1.0),
        marching: ["t", "sinh(t)", "0"],
        t0: 0.0,
        t_range: (-1.0, 0.0),
        orientation: Orientation::Canonical,
        notes: &[P1_ERRATUM],
    },
    Example {
        id: 2,
        name: "hyperbola-normal-binormal",
        curve: HYPERBOLA,
        s_range: (0.05, 1.0),
        marching: ["0", "sinh(s)*sinh(t)", "t - sinh(t)"],
        t0: 0.0,
        t_range: (-1.0, 1.0),
        orientation: Orientation::Canonical,
        notes: &[],
    },
    Example {
        id: 3,
        name: "helix-ruled",
        curve: HELIX,
        s_range: (-1.1, 1.0),
        marching: ["0", "t", "0"],
        t0: 0.0,
        t_range: (-1.0, 1.0),
        orientation: Orientation::Canonical,
        notes: &[HELIX_BINORMAL_NOTE],
    },
    Example {
        id: 4,
        name: "helix-log-exp",
        curve: HELIX,
        s_range: (1.05, 2.0),
        marching: ["0", "t*ln(s)", "t^2*exp(s)"],
        t0: 0.0,
        t_range: (0.0, 1.0),
        orientation: Orientation::PaperSigns,
        notes: &[HELIX_BINORMAL_NOTE],
    },
];

pub fn example(id: u8) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.id == id)
}
