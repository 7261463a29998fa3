pub mod meander;
pub mod noncross;
pub mod perm;
pub mod render;
pub mod surface;
pub mod verify;
