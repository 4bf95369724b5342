#pragma once
#include <string>
namespace homtqft { int cli_run(int argc, char** argv); }
