//! Integer bound machinery: binomial valuations, torsion criteria, and the
//! theorem-driven bound reports for spheres, projective and lens spaces.

mod arith;
mod data;
mod facts;
mod spaces;
mod tables;

pub use arith::{
    binomial_valuation, cp_config_model_dim, divides_binomial, dyadic_ones, in_metastable_range,
    is_prime,
};
pub use data::{KnownRecord, KnownResults, DEFAULT_KNOWN_RESULTS};
pub use facts::{BoundReport, Fact, FactKind, Quantity, Value};
pub use spaces::{
    bound_report, cp_tcs_facts, lens_tc_facts, lens_tcs_facts, rp_tcs_facts, sphere_tcs_difference,
    sphere_tcs_facts, witness_upper,
};
pub use tables::{
    emit_table1, emit_table2, table1_entry, CellOrigin, Table1, Table1Row, Table2, Table2Cell,
    Table2Row, TABLE1_DOMAIN,
};
