//! Writes the synthetic scale-test library to a directory, for compiling
//! `fixtures/synthetic/synthetic.jar`.
//!
//! Usage: cargo run --example gen_synthetic -- <out-dir>

#[path = "../tests/common/synth.rs"]
mod synth;

fn main() {
    let out = std::env::args().nth(1).expect("usage: gen_synthetic <out-dir>");
    let files = synth::library(synth::SEED, synth::TARGET_LOC);
    synth::write_tree(std::path::Path::new(&out), &files).expect("writing the tree");
    eprintln!("{} files, {} lines", files.len(), synth::loc(&files));
}
