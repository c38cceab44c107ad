#include <iostream>

int main() {
    std::cout << "schurkit\n";
    return 0;
}
