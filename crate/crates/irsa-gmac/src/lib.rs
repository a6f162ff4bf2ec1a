pub mod slot_bound;
