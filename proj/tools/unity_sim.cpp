// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/cli.hpp"

int main(int argc, char** argv) { return unity::cli::run_main(argc, argv); }
