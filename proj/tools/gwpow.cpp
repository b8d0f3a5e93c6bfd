#include <iostream>

#include "gwpow_app.hpp"

int main(int argc, char** argv)
{
    return gwpow::app::run(argc, argv, std::cout, std::cerr);
}
