pub mod figures;
pub mod gen_seed;
pub mod product;
pub mod scans;
pub mod verdict;
