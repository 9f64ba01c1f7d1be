//! Weak coloring numbers, admissibility and orders from augmentations.

mod exact;
mod lowtd;
mod tfa;
mod wreach;

pub use exact::{
    adm_exact, adm_exact_capped, adm_of_order, adm_of_order_max, wcol_exact, wcol_exact_capped, wcol_infty_exact,
    EXACT_CAP,
};
pub use lowtd::{low_treedepth_coloring, low_treedepth_coloring_capped, LowTreedepthColoring, DEPTH_CAP};
pub use tfa::{
    check_augmentation, compute_wcol_order, order_from_augmentation, tfa_augment, Augmentation, AugmentedOrder,
};
pub use wreach::{wcol_infty, wcol_of_order, wreach, wreach_all};
