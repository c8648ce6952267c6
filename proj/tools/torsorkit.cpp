// Placeholder main; replaced once the runner lands.
int main() { return 0; }
