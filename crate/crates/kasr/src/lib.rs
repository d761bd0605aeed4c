//! kasr: a toy-scale Japanese ASR fine-tuning toolkit.
//!
//! Everything runs on the CPU with a small built-in reverse-mode autodiff
//! engine: WAV in, log-Mel features, a Whisper-style encoder-decoder,
//! LoRA adapters, SpecAugment, and Japanese-aware WER/CER scoring.
//!
//! The crate is organized around the pipeline stages:
//!
//! - [`audio`] / [`mel`] — waveform loading, resampling, log-Mel features
//! - [`augment`] — SpecAugment and waveform augmentation
//! - [`autodiff`] — tensors, the computation graph, gradient checking
//! - [`model`] — the encoder-decoder and greedy transcription
//! - [`checkpoint`] — the binary checkpoint container
//! - [`lora`] — low-rank adapter injection and merging
//! - [`metrics`] — edit distances, WER/CER, Japanese normalization
//! - [`dataset`] — manifests, filtering, splits, vocabulary, synthesis
//! - [`trainer`] — fine-tuning loops, evaluation, rank sweeps

pub mod audio;
pub mod augment;
pub mod autodiff;
pub mod checkpoint;
pub mod dataset;
pub mod error;
pub mod lora;
pub mod mel;
pub mod metrics;
pub mod model;
pub mod trainer;

pub use error::{Error, Result};
