#pragma once
#include <string>
namespace homtqft { }
