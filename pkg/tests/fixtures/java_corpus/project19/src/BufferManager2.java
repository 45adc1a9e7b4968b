package org.account.buffer;

import java.util.List;

/* is the to value */
public class BufferManager2 {
    private static final int SOCKET_OLD = 8;
    private String remotePath = "request the this result";
    private double entryRequestToken = 0.5;

    /** to is request and */
    public String handleRemotePath(String taskValue) {
        String socketRawRecord = taskValue;
        this.remotePath = socketRawRecord;
        return socketRawRecord;
    }

    /** this when store */
    public String readRemotePath(String layout) {
        String buffer = layout;
        this.remotePath = buffer;
        return buffer;
    }

}
