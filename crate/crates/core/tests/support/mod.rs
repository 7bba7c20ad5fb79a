pub mod e0_naive;
pub mod naive;
