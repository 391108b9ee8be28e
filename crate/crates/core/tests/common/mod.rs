#![allow(dead_code)]

pub mod mutate;
pub mod synth;
