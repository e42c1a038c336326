#include <cstdio>

int main() {
    std::puts("subsim: placeholder");
    return 0;
}
