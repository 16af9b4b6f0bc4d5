//! The threefold side: intersection numbers, `S_X` of the fiber, the chain
//! bounding `S(W^T; F)`, and the final certificate.

mod certificate;
mod chain;
mod threefold;

pub use certificate::{certificate, certificate_value, crossing_cubic, second_cubic, threefold_checks, CertificateReport, Endpoints};
pub use chain::{a2_counter_check, s_anticanonical, s_w_exact, A2Report};
pub use threefold::{fiber_integrals, pu_volume, s_threefold_fiber, triple, FiberIntegrals, ThreefoldClass};
