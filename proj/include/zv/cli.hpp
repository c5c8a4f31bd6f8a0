#pragma once

namespace zv {

// Entry point of the command-line tool; returns the process exit code
// (0 success / all-pass, 1 verification mismatch, 2 input error,
// 3 numeric failure).
int cli_main(int argc, char** argv);

}  // namespace zv
