// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    std::process::exit(chiralnet::cli::run(std::env::args_os()));
}
