from mapsym.cli import main

main()
