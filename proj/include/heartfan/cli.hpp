#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace heartfan::cli {

// Exit codes.
constexpr int ok = 0;
constexpr int domain_error = 1;
constexpr int usage_error = 2;

// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// A bare name is looked up as <name>.json in $HEARTFAN_DATA, falling back to the bundled datasets.
std::filesystem::path resolve_dataset(const std::string& name_or_path);

}  // namespace heartfan::cli
