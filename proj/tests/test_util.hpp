#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "ca/camonoid.hpp"
#include "ca/group.hpp"
#include "ca/lattice.hpp"
#include "doctest.h"

namespace ca_test {

// Lattices and CA spaces hold a pointer back to their group, so fixtures own
// the group alongside everything derived from it.
struct GroupLattice {
  ca::FiniteGroup group;
  ca::SubgroupLattice lattice;

  explicit GroupLattice(const std::string& spec)
      : group(ca::build_group(spec)), lattice(ca::enumerate_subgroups(group)) {}
  GroupLattice(const GroupLattice&) = delete;
  GroupLattice& operator=(const GroupLattice&) = delete;
};

struct Monoid {
  ca::FiniteGroup group;
  ca::CaSpace space;

  Monoid(const std::string& spec, int q)
      : group(ca::build_group(spec)), space(ca::make_ca_space(group, q)) {}
  Monoid(const Monoid&) = delete;
  Monoid& operator=(const Monoid&) = delete;
};

inline std::string data_path(const std::string& name) {
  return std::string(CA_TEST_DATA_DIR) + "/" + name;
}

inline bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Runs f, requires it to throw E, and hands back e.what() for message checks.
template <class E, class F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  } catch (const std::exception& e) {
    FAIL("threw the wrong type: ", e.what());
    return {};
  }
  FAIL("nothing was thrown");
  return {};
}

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the installed CLI binary through the shell, capturing stdout (stderr
// folded in when merge_stderr is set). env is prepended verbatim, e.g.
// "CA_ALGEBRA_MAX_ENUM=100".
inline CliResult run_cli(const std::string& args, const std::string& env = "",
                         bool merge_stderr = false) {
  std::string cmd;
  if (!env.empty()) cmd += "env " + env + " ";
  cmd += std::string(CA_CLI_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";

  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int rc = pclose(pipe);
  REQUIRE(rc != -1);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

}  // namespace ca_test
