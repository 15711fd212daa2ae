#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "mcsreason/parser.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline mcsreason::Ontology load_fixture(const std::string& name) {
  return mcsreason::parse_ontology(read_fixture(name));
}
