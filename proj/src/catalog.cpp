#include "homtqft/catalog.hpp"
