/// Size guards for the brute-force enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order for which subgroups are enumerated.
    pub enum_guard: u64,
    /// Largest group order for which automorphisms are enumerated.
    pub aut_guard: u64,
    /// Largest fusion ring rank for which the subring lattice is built.
    pub rank_guard: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_guard: 256,
            aut_guard: 64,
            rank_guard: 12,
        }
    }
}
