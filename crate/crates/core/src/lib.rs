pub mod analytic;
pub mod e3space;
pub mod error;
pub mod json;
pub mod monogenic;
pub mod pde;
pub mod qalg;
pub mod roots;
