//! Exact computation of signed enhanced principal rank characteristic
//! (sepr) sequences of Hermitian matrices, together with the classification
//! of forbidden subsequences of orders 2 and 3.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod exact;
pub mod matrix;
pub mod search;
pub mod sepr;
