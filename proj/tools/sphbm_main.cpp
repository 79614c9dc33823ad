// CLI entry point; subcommands wired up in cli_*.
#include <cstdio>

int main() {
  std::puts("sphbm: subcommands pending");
  return 0;
}
