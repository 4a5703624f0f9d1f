#ifndef GGL_DEMO_HPP_
#define GGL_DEMO_HPP_

// Named worked examples replayed through the library, each paired with
// its expected output.

#include <string>
#include <string_view>
#include <vector>

namespace ggl {

  struct DemoResult {
    std::string name;
    std::string title;
    std::string output;
    std::string golden;
    bool        matches = false;
  };

  std::vector<std::string> demo_names();
  //! Throws DomainError for an unknown name.
  DemoResult run_demo(std::string_view name);

}  // namespace ggl

#endif  // GGL_DEMO_HPP_
