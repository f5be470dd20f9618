// Runs acceptance criteria 1-11 on their default fields and prints one line
// per criterion. Extra arguments replace the default fields.
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "srd/verify.hpp"

int main(int argc, char** argv) {
  using namespace srd;
  std::vector<std::string> fields(argv + 1, argv + argc);
  verify::Options opts;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  try {
    const auto results = verify::acceptance(fields, opts);
    bool failed = false;
    for (const auto& r : results) {
      std::cout << r.summary() << "\n";
      if (r.status == verify::Status::Fail) {
        failed = true;
        for (const auto& rep : r.reports)
          for (const auto& c : rep.checks)
            if (c.status == verify::Status::Fail)
              std::cout << "    " << rep.driver << "/" << c.id << " over GF(" << rep.field << "): expected "
                        << c.expected << ", computed " << c.computed << "\n";
      }
    }
    std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << std::endl;
    return failed ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 1;
  }
}
