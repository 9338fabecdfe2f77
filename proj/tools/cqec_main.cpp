// placeholder, replaced by the full CLI
#include <cstdio>
int main() { std::puts("cqec: under construction"); return 0; }
