#include "cli_app.hpp"

int main(int argc, char** argv) { return heider::cli::run(argc, argv); }
