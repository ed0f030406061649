#include <catch2/catch_amalgamated.hpp>
#include <gapcert/gapcert.hpp>
