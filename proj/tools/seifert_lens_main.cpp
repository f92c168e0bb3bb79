#include <iostream>

#include <seifert_lens/cli.hpp>

int main(int argc, char** argv) {
  return seifert_lens::cli::run(argc, argv, std::cout, std::cerr);
}
