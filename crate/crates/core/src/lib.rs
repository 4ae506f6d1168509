//! Exact computation of (3,3)-isogenies between Jacobians of genus-2 curves
//! over prime fields.
//!
//! Given a curve `H: Y² = F(X,Z)` (a squarefree sextic over `F_p`) and a
//! maximal Weil-isotropic subgroup `S ⊂ Jac(H)[3]` presented by two
//! order-3 generators in extended Mumford form, the library computes a
//! (possibly reducible) genus-2 curve `X` with `Jac(X) ≅ Jac(H)/S`, up to
//! quadratic twist, and verifies the result independently by naive point
//! counting and invariant comparison.
//!
//! The pipeline embeds `H` in `P⁶` along a rational normal curve, intersects
//! the secants of the kernel elements with the distinguished hyperplane,
//! projects to `P³` with centre spanned by those intersection points,
//! interpolates the plane conic and cubic through the Weierstrass images, and
//! recovers `X` as the double cover of the conic ramified over conic ∩ cubic.
//!
//! All arithmetic is exact; identical inputs produce bit-identical outputs.

pub mod algebra;
pub mod curve;
pub mod io;
pub mod isogeny;
pub mod jacobian;
pub mod recovery;
pub mod scan;
pub mod secant;
pub mod verify;
