use std::env;

/// Resource caps shared by the enumeration routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order that element enumeration will produce.
    pub order_cap: usize,
    /// Largest group order for which the subgroup lattice is enumerated.
    pub subgroup_order_cap: usize,
    /// Largest arity for which families of an operad are materialized.
    pub n_max: usize,
    /// Largest number of subgroups for transfer-system enumeration.
    pub transfer_subgroup_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 10_000,
            subgroup_order_cap: 200,
            n_max: 8,
            transfer_subgroup_cap: 20,
        }
    }
}

impl Limits {
    pub const ORDER_CAP_VAR: &'static str = "NINFTY_ORDER_CAP";
    pub const SUBGROUP_CAP_VAR: &'static str = "NINFTY_SUBGROUP_ORDER_CAP";
    pub const N_MAX_VAR: &'static str = "NINFTY_N_MAX";
    pub const TRANSFER_CAP_VAR: &'static str = "NINFTY_TRANSFER_CAP";

    /// Defaults overridden by any of the `NINFTY_*` environment variables
    /// that parse as a positive integer.
    pub fn from_env() -> Self {
        fn read(var: &str, default: usize) -> usize {
            env::var(var)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
                .filter(|&v| v > 0)
                .unwrap_or(default)
        }
        let d = Limits::default();
        Limits {
            order_cap: read(Self::ORDER_CAP_VAR, d.order_cap),
            subgroup_order_cap: read(Self::SUBGROUP_CAP_VAR, d.subgroup_order_cap),
            n_max: read(Self::N_MAX_VAR, d.n_max),
            transfer_subgroup_cap: read(Self::TRANSFER_CAP_VAR, d.transfer_subgroup_cap),
        }
    }
}
