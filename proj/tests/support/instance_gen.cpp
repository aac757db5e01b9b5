#include "support/instance_gen.hpp"
