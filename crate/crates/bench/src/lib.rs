// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Criterion benchmarks for the pswap pipeline live in `benches/`.
