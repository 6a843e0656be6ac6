#include <cstdio>

int main() {
    std::puts("minorkit cli placeholder");
    return 0;
}
