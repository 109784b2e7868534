from BilliardsA2.cli import main


main()
