#include <cstdio>

int main() {
  std::puts("drs: command line not wired up yet");
  return 1;
}
