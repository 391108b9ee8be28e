package library;

abstract class A { }
