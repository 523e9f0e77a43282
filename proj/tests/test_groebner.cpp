#include <catch2/catch_amalgamated.hpp>
#include "entrolab/entrolab.hpp"
