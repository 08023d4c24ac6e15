from corona_fib.cli import main

main()
