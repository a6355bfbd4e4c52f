from freeway_oracle.cli import main

main()
