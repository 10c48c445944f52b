//! Exact matrix calculus over prime fields.

pub mod bch;
pub mod examples;
pub mod exp;
pub mod field;
pub mod free;
pub mod matrix;
pub mod pgl;
pub mod span;

pub use bch::{bch_apply, bch_series, bch_table, BchTable, BchTerm};
pub use examples::{
    conrad_example, conrad_matrix, heisenberg_module_check, weight_space_demo, ConradReport,
    HeisenbergReport, WeightSpaceReport,
};
pub use exp::{nilpotent_p_power_check, regular_nilpotent, t_power, trunc_exp, trunc_log};
pub use field::{is_prime, Fp};
pub use matrix::{FpMatrix, MatrixDocument};
pub use pgl::{characteristic_polynomial, pgl_nilpotent_lift};
