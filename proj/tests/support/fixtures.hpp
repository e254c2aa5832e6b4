#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef AID_FIXTURE_DIR
#error "AID_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace aid::testing {

inline std::string read_fixture(const std::string& name) {
    std::ifstream file(std::string(AID_FIXTURE_DIR) + "/" + name, std::ios::binary);
    if (!file) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    std::string text = buffer.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

inline const std::string& research_example() {
    static const std::string text = read_fixture("research_example.txt");
    return text;
}

inline const std::string& education_example() {
    static const std::string text = read_fixture("education_example.txt");
    return text;
}

}  // namespace aid::testing
