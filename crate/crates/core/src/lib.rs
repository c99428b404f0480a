pub mod enumerate;
pub mod error;
pub mod fs_action;
pub mod limits;
pub mod patterns;
pub mod poly;
pub mod stack_sort;
pub mod trees;
pub mod word;
pub mod mahonian;
pub mod posets;
pub mod harness;
