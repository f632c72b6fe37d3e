use crate::twocob::Cobordism2;

use super::{Cobordism1, ComponentKind};

/// Forgets orientations: every arc or loop becomes a genus-zero surface
/// component with the same boundary circles.
pub fn phi_to_2cob(c: &Cobordism1) -> Cobordism2 {
    Cobordism2::new_unchecked(c.l_in().clone(), c.l_out().clone(), vec![0; c.comp_count()])
}

/// No cups.
pub fn is_cofibration1(c: &Cobordism1) -> bool {
    c.classify().is_ok_and(|kinds| !kinds.contains(&ComponentKind::Cup))
}

/// No caps and no loops.
pub fn is_fibration1(c: &Cobordism1) -> bool {
    c.classify().is_ok_and(|kinds| !kinds.iter().any(|k| matches!(k, ComponentKind::Cap | ComponentKind::Loop)))
}
