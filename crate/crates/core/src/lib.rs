pub mod enumeration;
pub mod polynomial;
pub mod rays;
pub mod render;
pub mod signature;
pub mod tracing;
