#include <gapcert/gapcert.hpp>
int main() { return 1; }
