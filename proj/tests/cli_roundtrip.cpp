// Exercises the CLI exit-code contract: 0 = found/verified, 1 = negative
// answer, 2 = input error; and the tour -> verify round trip.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "het/designs.hpp"
#include "het/hypergraph.hpp"

namespace {

std::string cli;
int failures = 0;

int run(const std::string& args) {
  int status = std::system((cli + " " + args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void expect(const std::string& args, int expected) {
  int got = run(args);
  if (got != expected) {
    std::printf("FAIL: `%s` exited %d, expected %d\n", args.c_str(), got, expected);
    ++failures;
  }
}

void write(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: cli_roundtrip <path-to-cli>\n");
    return 2;
  }
  cli = argv[1];

  write("rt_single.hg", het::formatHypergraph(het::makeHypergraph(3, {{0, 1, 2}})));
  write("rt_fano3.hg", het::formatHypergraph(het::scale(het::genSTS(7), 3)));
  write("rt_sqs8.hg", het::formatHypergraph(het::genSQS8()));
  write("rt_bad.hg", "3\n0 1 9\n");

  // generation matches the library output
  expect("gen sts 9 > rt_sts9.hg 2>/dev/null", 0);
  expect("gen sts 8 2>/dev/null", 2);
  expect("gen sqs8 2>/dev/null > /dev/null", 0);
  expect("gen scale rt_sts9.hg 3 > rt_sts9x3.hg 2>/dev/null", 0);

  // check reports and exits 0 on well-formed input
  expect("check rt_fano3.hg 2>/dev/null", 0);
  expect("check rt_bad.hg 2>/dev/null", 2);
  expect("check rt_missing.hg 2>/dev/null", 2);

  // round trip: every tour that exits 0 verifies at 0
  for (std::string name : {"rt_fano3", "rt_sqs8", "rt_sts9x3"}) {
    expect("tour " + name + ".hg --spanning > " + name + ".tour 2>/dev/null", 0);
    expect("verify " + name + ".hg " + name + ".tour --spanning 2>/dev/null", 0);
    expect("ucycle " + name + ".hg " + name + ".tour > /dev/null 2>&1", 0);
    expect("bicg " + name + ".hg " + name + ".tour > /dev/null 2>&1", 0);
  }

  // negative answers exit 1
  expect("family rt_single.hg 2>/dev/null", 1);
  expect("tour rt_single.hg 2>/dev/null", 1);
  expect("barrier rt_sts9.hg 2>/dev/null", 1);         // no barrier exists
  expect("barrier rt_single.hg > /dev/null 2>&1", 0);  // barrier found
  expect("barrier rt_fano3.hg > /dev/null 2>&1", 2);   // 3^21 states exceed the cap

  // family output verifies as a family
  expect("family rt_sqs8.hg > rt_sqs8.fam 2>/dev/null", 0);
  expect("verify rt_sqs8.hg rt_sqs8.fam 2>/dev/null", 0);

  // a corrupted tour is rejected with exit 1
  expect("tour rt_fano3.hg > rt_tmp.tour 2>/dev/null", 0);
  {
    std::ifstream in("rt_tmp.tour");
    std::string tour;
    std::getline(in, tour);
    write("rt_broken.tour", tour + "\n" + tour + "\n");  // every edge now traversed twice
  }
  expect("verify rt_fano3.hg rt_broken.tour 2>/dev/null", 1);

  // oracle exit codes follow the verdict
  expect("oracle rt_single.hg --mode family > /dev/null 2>&1", 1);
  expect("oracle rt_sts9.hg --mode family > /dev/null 2>&1", 0);
  expect("oracle rt_sqs8.hg --mode family > /dev/null 2>&1", 2);  // cap exceeded

  if (failures == 0) std::printf("cli round trip: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
